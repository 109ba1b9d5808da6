#include "graddae/numeric_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graddae {

Matrix sigmoid(const Matrix& z) {
    Matrix out(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.size(); ++i) out.data()[i] = sigmoid(z.data()[i]);
    return out;
}

double binary_cross_entropy(const Matrix& y, const Matrix& t) {
    if (y.rows() != t.rows() || y.cols() != t.cols())
        throw std::invalid_argument("binary_cross_entropy: shape mismatch (" +
                                    std::to_string(y.rows()) + "x" + std::to_string(y.cols()) +
                                    " vs " + std::to_string(t.rows()) + "x" +
                                    std::to_string(t.cols()) + ")");
    if (y.rows() == 0) throw std::invalid_argument("binary_cross_entropy: empty input");
    double total = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double yc = std::clamp(y.data()[i], kLossClip, 1.0 - kLossClip);
        const double ti = t.data()[i];
        total -= ti * std::log(yc) + (1.0 - ti) * std::log1p(-yc);
    }
    return total / static_cast<double>(y.rows());
}

Matrix softmax_rows(const Matrix& logits) {
    Matrix p(logits.rows(), logits.cols());
    const std::size_t c = logits.cols();
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        const double* li = logits.data() + i * c;
        double* pi = p.data() + i * c;
        double m = li[0];
        for (std::size_t j = 1; j < c; ++j) m = std::max(m, li[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            pi[j] = std::exp(li[j] - m);
            sum += pi[j];
        }
        for (std::size_t j = 0; j < c; ++j) pi[j] /= sum;
    }
    return p;
}

}  // namespace graddae
