#pragma once

#include "graddae/budget.hpp"
#include "graddae/corruption.hpp"
#include "graddae/model.hpp"
#include "graddae/optimizer.hpp"

#include <vector>

namespace graddae {

/// One layer of the pretraining schedule: hidden width, update budget and
/// the stacked fraction f. Stage 1 has no layers below it, so the budget is
/// a plain epoch count and f changes nothing.
struct StageSpec {
    std::size_t units = 0;
    std::size_t budget = 0;
    double fraction = 0.0;
};

struct EpochPoint {
    std::size_t stage = 0;   // 1-based
    EpochKind kind = EpochKind::stacked;
    std::size_t epoch = 0;   // 1-based within the stage
    double train_loss = 0.0; // mean reconstruction cross-entropy
};

struct StageRun {
    PhasePlan plan;
    std::size_t units_consumed = 0;
    std::vector<EpochPoint> curve;
};

struct StageOutcome {
    std::vector<EpochPoint> curve;
    DecoderHead decoder;  // trained head of this stage
};

/// Trains the top layer of `enc` (freshly initialized by the caller) with a
/// decoder head created fresh at stage start: first the plan's stacked
/// epochs with all lower layers frozen, then its gradual epochs with every
/// layer updating. Every minibatch is corrupted freshly and the loss is
/// always computed against the clean input. Charges the ledger one unit per
/// stacked epoch and `stage` units per gradual epoch, exhausting it exactly.
/// The trained head is returned so the finished model can be evaluated;
/// callers drop it when another stage follows.
StageOutcome pretrain_stage(EncoderStack& enc, const PhasePlan& plan, const Matrix& train_inputs,
                            const CorruptionSpec& noise, const SgdHyper& opt, BudgetLedger& ledger,
                            Rng& rng);

struct PretrainResult {
    EncoderStack encoder;
    DecoderHead decoder;  // head of the last stage, for reconstruction metrics
    std::vector<StageRun> stages;
};

/// Greedy layer-wise pretraining: appends one freshly initialized layer per
/// stage and runs pretrain_stage on it with its own budget ledger. Only
/// encoder weights carry forward between stages; intermediate decoder heads
/// are dropped.
PretrainResult pretrain_stack(std::size_t input_dim, const std::vector<StageSpec>& stages,
                              const Matrix& train_inputs, const CorruptionSpec& noise,
                              const SgdHyper& opt, Rng& rng);

}  // namespace graddae
