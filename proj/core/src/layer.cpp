#include "graddae/layer.hpp"

#include <cmath>
#include <stdexcept>

namespace graddae {

DenseLayer init_dense(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    if (fan_in == 0 || fan_out == 0)
        throw std::invalid_argument("init_dense: zero dimension");
    const double a = 4.0 * std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Matrix w(fan_in, fan_out);
    for (std::size_t i = 0; i < w.size(); ++i) w.data()[i] = rng.uniform(-a, a);
    return DenseLayer{std::move(w), std::vector<double>(fan_out, 0.0)};
}

}  // namespace graddae
