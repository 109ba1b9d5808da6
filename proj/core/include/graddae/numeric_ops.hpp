#pragma once

#include "graddae/matrix.hpp"

#include <cmath>
#include <limits>

namespace graddae {

/// Clip applied to predictions inside the cross-entropy losses so logs stay
/// finite.
inline constexpr double kLossClip = 1e-12;

/// Numerically stable logistic function. Saturates instead of overflowing and
/// keeps the output strictly inside (0, 1).
inline double sigmoid(double z) {
    double s;
    if (z >= 0.0) {
        s = 1.0 / (1.0 + std::exp(-z));
    } else {
        const double e = std::exp(z);
        s = e / (1.0 + e);
    }
    if (s <= 0.0) return std::numeric_limits<double>::denorm_min();
    if (s >= 1.0) return 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    return s;
}

Matrix sigmoid(const Matrix& z);

/// Mean over rows (samples) of the per-sample sum over columns of
/// -[t*ln(y) + (1-t)*ln(1-y)], with y clipped to [kLossClip, 1-kLossClip].
double binary_cross_entropy(const Matrix& y, const Matrix& t);

/// Row-wise softmax, stabilized by subtracting the row maximum.
Matrix softmax_rows(const Matrix& logits);

}  // namespace graddae
