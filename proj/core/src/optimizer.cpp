#include "graddae/optimizer.hpp"

#include <stdexcept>
#include <string>

namespace graddae {

void validate(const SgdHyper& h) {
    if (!(h.learning_rate > 0.0))
        throw std::invalid_argument("learning_rate must be positive");
    if (!(h.momentum >= 0.0 && h.momentum < 1.0))
        throw std::invalid_argument("momentum must be in [0, 1)");
    if (!(h.weight_decay >= 0.0))
        throw std::invalid_argument("weight_decay must be non-negative");
    if (h.batch_size == 0)
        throw std::invalid_argument("batch_size must be at least 1");
}

namespace {

ParamGrad zero_like(const DenseLayer& layer) {
    return ParamGrad{Matrix(layer.fan_in(), layer.fan_out()),
                     std::vector<double>(layer.fan_out(), 0.0)};
}

}  // namespace

void sgd_step(DenseLayer& params, const ParamGrad& grad, ParamGrad& velocity,
              const SgdHyper& h) {
    if (grad.weights.rows() != params.weights.rows() ||
        grad.weights.cols() != params.weights.cols() ||
        grad.biases.size() != params.biases.size())
        throw std::invalid_argument("sgd_step: gradient shape does not match parameters");
    if (velocity.weights.size() != params.weights.size() ||
        velocity.biases.size() != params.biases.size())
        throw std::invalid_argument("sgd_step: velocity shape does not match parameters");

    for (std::size_t i = 0; i < params.weights.size(); ++i) {
        double& v = velocity.weights.data()[i];
        double& w = params.weights.data()[i];
        v = h.momentum * v - h.learning_rate * (grad.weights.data()[i] + h.weight_decay * w);
        w += v;
    }
    for (std::size_t i = 0; i < params.biases.size(); ++i) {
        double& v = velocity.biases[i];
        double& b = params.biases[i];
        v = h.momentum * v - h.learning_rate * (grad.biases[i] + h.weight_decay * b);
        b += v;
    }
}

SgdOptimizer::SgdOptimizer(SgdHyper hyper, const EncoderStack& enc, const DenseLayer& head)
    : hyper_(hyper), head_velocity_(zero_like(head)) {
    validate(hyper_);
    encoder_velocity_.reserve(enc.depth());
    for (const DenseLayer& layer : enc.layers) encoder_velocity_.push_back(zero_like(layer));
}

void SgdOptimizer::step(EncoderStack& enc, DenseLayer& head, const Gradients& grads) {
    if (grads.encoder.size() != enc.depth() || encoder_velocity_.size() != enc.depth())
        throw std::invalid_argument("SgdOptimizer::step: gradient set does not match encoder");
    for (std::size_t i = 0; i < enc.depth(); ++i)
        if (grads.encoder[i])
            sgd_step(enc.layers[i], *grads.encoder[i], encoder_velocity_[i], hyper_);
    sgd_step(head, grads.head, head_velocity_, hyper_);
}

}  // namespace graddae
