#include "graddae/pretraining.hpp"

#include <stdexcept>
#include <string>

namespace graddae {

StageOutcome pretrain_stage(EncoderStack& enc, const PhasePlan& plan, const Matrix& train_inputs,
                            const CorruptionSpec& noise, const SgdHyper& opt, BudgetLedger& ledger,
                            Rng& rng) {
    if (enc.depth() != plan.stage)
        throw std::invalid_argument("pretrain_stage: encoder depth " +
                                    std::to_string(enc.depth()) + " does not match stage " +
                                    std::to_string(plan.stage));
    if (train_inputs.rows() == 0) throw std::invalid_argument("pretrain_stage: empty data");
    if (train_inputs.cols() != enc.input_dim())
        throw std::invalid_argument("pretrain_stage: data dimension does not match encoder");
    validate(opt);

    const std::size_t n = train_inputs.rows();
    const std::size_t data_dim = train_inputs.cols();

    // Throwaway decoder head for this stage; only encoder weights survive.
    DecoderHead dec{init_dense(enc.output_dim(), data_dim, rng)};
    SgdOptimizer optimizer(opt, enc, dec.layer);

    const FreezeMask stacked_mask = FreezeMask::below_stage(enc.depth(), plan.stage);
    const FreezeMask gradual_mask = FreezeMask::none(enc.depth());

    std::vector<EpochPoint> curve;
    curve.reserve(plan.stacked_epochs + plan.gradual_epochs);
    auto perm = iota_indices(n);

    const std::size_t total_epochs = plan.stacked_epochs + plan.gradual_epochs;
    for (std::size_t e = 0; e < total_epochs; ++e) {
        const bool stacked = e < plan.stacked_epochs;
        const FreezeMask& freeze = stacked ? stacked_mask : gradual_mask;

        rng.shuffle(perm);
        double loss_sum = 0.0;
        for (std::size_t start = 0; start < n; start += opt.batch_size) {
            const std::size_t len = std::min(opt.batch_size, n - start);
            const std::span<const std::size_t> batch_idx(perm.data() + start, len);
            const Matrix x = take_rows(train_inputs, batch_idx);
            const Matrix x_tilde = apply_masking(x, noise, rng);
            const ForwardTrace trace = dae_forward(enc, dec, x_tilde);
            loss_sum += binary_cross_entropy(trace.reconstruction, x) * static_cast<double>(len);
            const Gradients grads = dae_backward(trace, x, enc, dec, freeze);
            optimizer.step(enc, dec.layer, grads);
        }

        ledger.charge(stacked ? EpochKind::stacked : EpochKind::gradual,
                      stacked ? 1 : plan.gradual_cost());
        curve.push_back(EpochPoint{plan.stage, stacked ? EpochKind::stacked : EpochKind::gradual,
                                   e + 1, loss_sum / static_cast<double>(n)});
    }
    return StageOutcome{std::move(curve), std::move(dec)};
}

PretrainResult pretrain_stack(std::size_t input_dim, const std::vector<StageSpec>& stages,
                              const Matrix& train_inputs, const CorruptionSpec& noise,
                              const SgdHyper& opt, Rng& rng) {
    if (stages.empty()) throw std::invalid_argument("pretrain_stack: no stages configured");
    if (train_inputs.cols() != input_dim)
        throw std::invalid_argument("pretrain_stack: data dimension does not match input_dim");

    PretrainResult result;
    std::size_t below_dim = input_dim;
    for (std::size_t k = 0; k < stages.size(); ++k) {
        const StageSpec& spec = stages[k];
        if (spec.units == 0)
            throw std::invalid_argument("pretrain_stack: stage " + std::to_string(k + 1) +
                                        " has zero units");
        result.encoder.layers.push_back(init_dense(below_dim, spec.units, rng));
        below_dim = spec.units;

        const PhasePlan plan = allocate_budget(spec.budget, spec.fraction, k + 1);
        BudgetLedger ledger(plan.total_budget);
        auto outcome = pretrain_stage(result.encoder, plan, train_inputs, noise, opt, ledger, rng);
        result.stages.push_back(StageRun{plan, ledger.consumed(), std::move(outcome.curve)});
        if (k + 1 == stages.size()) result.decoder = std::move(outcome.decoder);
    }
    return result;
}

}  // namespace graddae
