#include "graddae/corruption.hpp"

#include <stdexcept>
#include <string>

namespace graddae {

Matrix apply_masking(const Matrix& x, const CorruptionSpec& spec, Rng& rng) {
    if (!(spec.rate >= 0.0 && spec.rate <= 1.0))
        throw std::invalid_argument("apply_masking: rate " + std::to_string(spec.rate) +
                                    " outside [0, 1]");
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        out.data()[i] = rng.uniform() < spec.rate ? 0.0 : x.data()[i];
    return out;
}

}  // namespace graddae
