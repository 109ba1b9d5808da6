#include "graddae/model.hpp"

#include <stdexcept>
#include <string>

namespace graddae {

namespace {

void check_chain(const EncoderStack& enc, const DecoderHead* dec) {
    if (enc.layers.empty()) throw std::invalid_argument("encoder stack has no layers");
    for (std::size_t i = 1; i < enc.layers.size(); ++i)
        if (enc.layers[i].fan_in() != enc.layers[i - 1].fan_out())
            throw std::invalid_argument("encoder layer " + std::to_string(i + 1) +
                                        " does not chain with layer " + std::to_string(i));
    if (dec && dec->layer.fan_in() != enc.output_dim())
        throw std::invalid_argument("decoder head does not chain with encoder output");
}

/// delta <- (delta * W^T) ⊙ h (1 - h), the error signal below a layer.
Matrix backprop_through(const Matrix& delta, const DenseLayer& layer, const Matrix& h_below) {
    Matrix out = matmul_a_bt(delta, layer.weights);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double h = h_below.data()[i];
        out.data()[i] *= h * (1.0 - h);
    }
    return out;
}

ParamGrad layer_grad(const Matrix& input, const Matrix& delta) {
    return ParamGrad{matmul_at_b(input, delta), column_sums(delta)};
}

}  // namespace

FreezeMask FreezeMask::below_stage(std::size_t depth, std::size_t stage) {
    if (stage == 0 || stage > depth)
        throw std::invalid_argument("FreezeMask::below_stage: stage out of range");
    FreezeMask m{std::vector<std::uint8_t>(depth, 0)};
    for (std::size_t i = 0; i + 1 < stage; ++i) m.frozen[i] = 1;
    return m;
}

ForwardTrace dae_forward(const EncoderStack& enc, const DecoderHead& dec, const Matrix& x_tilde) {
    check_chain(enc, &dec);
    if (x_tilde.cols() != enc.input_dim())
        throw std::invalid_argument("dae_forward: input has " + std::to_string(x_tilde.cols()) +
                                    " columns, encoder expects " +
                                    std::to_string(enc.input_dim()));
    ForwardTrace trace;
    trace.corrupted_input = x_tilde;
    trace.activations.reserve(enc.depth());
    const Matrix* below = &trace.corrupted_input;
    for (const DenseLayer& layer : enc.layers) {
        Matrix a = matmul(*below, layer.weights);
        add_row_inplace(a, layer.biases);
        trace.activations.push_back(sigmoid(a));
        below = &trace.activations.back();
    }
    Matrix a = matmul(*below, dec.layer.weights);
    add_row_inplace(a, dec.layer.biases);
    trace.reconstruction = sigmoid(a);
    return trace;
}

Gradients dae_backward(const ForwardTrace& trace, const Matrix& x, const EncoderStack& enc,
                       const DecoderHead& dec, const FreezeMask& freeze) {
    check_chain(enc, &dec);
    const std::size_t depth = enc.depth();
    if (trace.activations.size() != depth)
        throw std::invalid_argument("dae_backward: trace depth does not match encoder");
    if (freeze.size() != depth)
        throw std::invalid_argument("dae_backward: freeze mask length does not match encoder");
    if (x.rows() != trace.reconstruction.rows() || x.cols() != trace.reconstruction.cols())
        throw std::invalid_argument("dae_backward: target shape does not match reconstruction");
    for (std::size_t i = 0; i < depth; ++i) {
        const Matrix& h = trace.activations[i];
        if (h.rows() != x.rows() || h.cols() != enc.layers[i].fan_out())
            throw std::invalid_argument("dae_backward: trace does not match parameters");
    }

    const double inv_n = 1.0 / static_cast<double>(x.rows());
    // Sigmoid output with cross-entropy loss: the error at the pre-activation
    // is just (y - x) / N.
    Matrix delta(x.rows(), x.cols());
    for (std::size_t i = 0; i < delta.size(); ++i)
        delta.data()[i] = (trace.reconstruction.data()[i] - x.data()[i]) * inv_n;

    Gradients grads;
    grads.encoder.resize(depth);
    grads.head = layer_grad(trace.activations.back(), delta);

    delta = backprop_through(delta, dec.layer, trace.activations.back());
    for (std::size_t i = depth; i-- > 0;) {
        const Matrix& input = i == 0 ? trace.corrupted_input : trace.activations[i - 1];
        if (!freeze.is_frozen(i)) grads.encoder[i] = layer_grad(input, delta);
        if (i == 0) break;
        bool any_below = false;
        for (std::size_t j = 0; j < i; ++j) any_below |= !freeze.is_frozen(j);
        if (!any_below) break;  // nothing below wants a gradient
        delta = backprop_through(delta, enc.layers[i], trace.activations[i - 1]);
    }
    return grads;
}

double entropy_floor(const Matrix& x) {
    return binary_cross_entropy(x, x);
}

double relative_ce(const EncoderStack& enc, const DecoderHead& dec, const Matrix& x_test,
                   const CorruptionSpec& spec, Rng& rng) {
    const Matrix corrupted = apply_masking(x_test, spec, rng);
    const ForwardTrace trace = dae_forward(enc, dec, corrupted);
    return binary_cross_entropy(trace.reconstruction, x_test) - entropy_floor(x_test);
}

}  // namespace graddae
