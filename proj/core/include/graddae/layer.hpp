#pragma once

#include "graddae/matrix.hpp"
#include "graddae/rng.hpp"

#include <vector>

namespace graddae {

/// Fully connected layer mapping fan_in -> fan_out. The weight matrix is
/// stored fan_in x fan_out so a batch propagates as x * W + b.
struct DenseLayer {
    Matrix weights;
    std::vector<double> biases;

    std::size_t fan_in() const { return weights.rows(); }
    std::size_t fan_out() const { return weights.cols(); }

    bool operator==(const DenseLayer&) const = default;
};

/// Weights drawn uniformly from [-a, a] with a = 4*sqrt(6/(fan_in+fan_out)),
/// the usual scaling for sigmoid units; biases start at zero. Bitwise
/// reproducible per rng state (weights are drawn in row-major order).
DenseLayer init_dense(std::size_t fan_in, std::size_t fan_out, Rng& rng);

}  // namespace graddae
