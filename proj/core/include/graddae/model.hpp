#pragma once

#include "graddae/corruption.hpp"
#include "graddae/layer.hpp"
#include "graddae/matrix.hpp"
#include "graddae/numeric_ops.hpp"
#include "graddae/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace graddae {

/// Ordered encoder layers; layer i maps dim_{i-1} -> dim_i.
struct EncoderStack {
    std::vector<DenseLayer> layers;

    std::size_t depth() const { return layers.size(); }
    std::size_t input_dim() const { return layers.front().fan_in(); }
    std::size_t output_dim() const { return layers.back().fan_out(); }

    bool operator==(const EncoderStack&) const = default;
};

/// Single layer mapping the top hidden representation back to input space.
struct DecoderHead {
    DenseLayer layer;

    bool operator==(const DecoderHead&) const = default;
};

/// All intermediates of one batch pass: corrupted input, hidden activations
/// h_1..h_k and the reconstruction.
struct ForwardTrace {
    Matrix corrupted_input;
    std::vector<Matrix> activations;
    Matrix reconstruction;
};

/// Per-encoder-layer update mask; true = frozen (receives no gradient
/// entry). The decoder head is never frozen.
struct FreezeMask {
    std::vector<std::uint8_t> frozen;

    static FreezeMask none(std::size_t depth) {
        return FreezeMask{std::vector<std::uint8_t>(depth, 0)};
    }
    /// Freezes layers 1..stage-1, i.e. everything below the stage layer.
    static FreezeMask below_stage(std::size_t depth, std::size_t stage);

    bool is_frozen(std::size_t layer) const { return frozen[layer] != 0; }
    std::size_t size() const { return frozen.size(); }
};

/// Gradient of one dense layer, same shapes as the layer itself.
struct ParamGrad {
    Matrix weights;
    std::vector<double> biases;
};

/// Gradient set for an encoder stack plus its head (decoder or classifier
/// output). Frozen encoder layers carry no entry.
struct Gradients {
    std::vector<std::optional<ParamGrad>> encoder;
    ParamGrad head;
};

/// h_i = sigmoid(h_{i-1} * W_i + b_i) with h_0 = x_tilde, followed by
/// y = sigmoid(h_k * W_dec + b_dec).
ForwardTrace dae_forward(const EncoderStack& enc, const DecoderHead& dec, const Matrix& x_tilde);

/// Gradients of the mean binary cross-entropy between the trace's
/// reconstruction and the clean input x. Frozen layers yield no entry, but
/// the error signal still propagates through them so unfrozen layers further
/// down receive correct gradients.
Gradients dae_backward(const ForwardTrace& trace, const Matrix& x, const EncoderStack& enc,
                       const DecoderHead& dec, const FreezeMask& freeze);

/// Cross-entropy of a dataset with itself: the minimum achievable
/// reconstruction loss, used to normalize reported errors.
double entropy_floor(const Matrix& x);

/// Reconstruction cross-entropy on freshly corrupted inputs, relative to the
/// entropy floor of the clean data. Non-negative for every model.
double relative_ce(const EncoderStack& enc, const DecoderHead& dec, const Matrix& x_test,
                   const CorruptionSpec& spec, Rng& rng);

}  // namespace graddae
