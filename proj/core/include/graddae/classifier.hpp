#pragma once

#include "graddae/model.hpp"

#include <span>
#include <utility>

namespace graddae {

/// Pretrained encoder with a softmax classification layer on top.
struct ClassifierNet {
    EncoderStack encoder;
    DenseLayer output;

    std::size_t classes() const { return output.fan_out(); }

    bool operator==(const ClassifierNet&) const = default;
};

/// Class logits for a batch of clean inputs (no corruption at supervised
/// time).
Matrix classifier_logits(const ClassifierNet& net, const Matrix& x);

/// Mean softmax negative log-likelihood and its gradients with respect to
/// every parameter (all encoder layers and the output layer).
std::pair<double, Gradients> classifier_loss_and_grad(const ClassifierNet& net, const Matrix& x,
                                                      std::span<const int> labels);

/// Fraction of samples whose argmax class differs from the label. Ties break
/// toward the lowest class id.
double classification_error(const ClassifierNet& net, const Matrix& x,
                            std::span<const int> labels);

}  // namespace graddae
