#pragma once

#include "graddae/matrix.hpp"
#include "graddae/rng.hpp"

namespace graddae {

enum class NoiseKind { masking };

struct CorruptionSpec {
    NoiseKind kind = NoiseKind::masking;
    double rate = 0.0;  // probability of zeroing each component
};

/// Masking noise: each component is independently set to 0 with probability
/// spec.rate and copied unchanged otherwise. One uniform draw is consumed per
/// component, in row-major order, so the output is a pure function of
/// (x, spec, rng state). Callers re-corrupt at every presentation of a
/// sample; nothing is cached here.
Matrix apply_masking(const Matrix& x, const CorruptionSpec& spec, Rng& rng);

}  // namespace graddae
