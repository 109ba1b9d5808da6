#pragma once

#include "graddae/classifier.hpp"
#include "graddae/model.hpp"

namespace graddae {

struct SgdHyper {
    double learning_rate = 0.1;
    std::size_t batch_size = 20;
    double momentum = 0.0;    // in [0, 1)
    double weight_decay = 0.0;

    bool operator==(const SgdHyper&) const = default;
};

void validate(const SgdHyper& h);

/// One momentum-SGD update of a single layer:
///   v <- momentum * v - learning_rate * (grad + weight_decay * param)
///   param <- param + v
void sgd_step(DenseLayer& params, const ParamGrad& grad, ParamGrad& velocity, const SgdHyper& h);

/// Optimizer state for an encoder stack plus one head layer. Velocity
/// buffers mirror every parameter and start at zero.
class SgdOptimizer {
public:
    SgdOptimizer(SgdHyper hyper, const EncoderStack& enc, const DenseLayer& head);

    /// Applies sgd_step to the head and to every encoder layer that has a
    /// gradient entry; frozen layers (no entry) stay bitwise untouched.
    void step(EncoderStack& enc, DenseLayer& head, const Gradients& grads);

    const SgdHyper& hyper() const { return hyper_; }

private:
    SgdHyper hyper_;
    std::vector<ParamGrad> encoder_velocity_;
    ParamGrad head_velocity_;
};

}  // namespace graddae
