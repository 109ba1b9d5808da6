#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace graddae {

/// Epoch accounting for one pretraining stage. A stacked epoch updates only
/// the stage's own layer and costs 1 unit; a gradual epoch updates all
/// `stage` encoder layers and costs `stage` units. The plan always satisfies
///   stacked_epochs + stage * gradual_epochs == total_budget.
struct PhasePlan {
    std::size_t stage = 2;           // encoder depth during this stage
    std::size_t stacked_epochs = 0;  // s
    std::size_t gradual_epochs = 0;  // g
    std::size_t total_budget = 0;    // N, in layer-update units
    double fraction = 0.0;           // realized s / N

    std::size_t gradual_cost() const { return stage; }

    bool operator==(const PhasePlan&) const = default;
};

/// Splits a budget of N layer-update units between stacked and gradual
/// epochs so that a fraction f of the updates happen in stacked epochs:
/// s = round(f*N), decremented by at most stage-1 so the remainder divides
/// evenly into gradual epochs. Throws if no feasible split exists.
PhasePlan allocate_budget(std::size_t total_units, double fraction, std::size_t stage = 2);

enum class EpochKind { stacked, gradual };

/// Tracks layer-update units charged against a fixed total. Overdrawing
/// throws; a finished stage must have consumed the budget exactly.
class BudgetLedger {
public:
    explicit BudgetLedger(std::size_t total_units) : total_(total_units) {}

    void charge(EpochKind kind, std::size_t units);

    std::size_t total() const { return total_; }
    std::size_t consumed() const { return consumed_; }
    std::size_t remaining() const { return total_ - consumed_; }
    bool exhausted() const { return consumed_ == total_; }
    const std::vector<std::pair<EpochKind, std::size_t>>& entries() const { return entries_; }

private:
    std::size_t total_;
    std::size_t consumed_ = 0;
    std::vector<std::pair<EpochKind, std::size_t>> entries_;
};

}  // namespace graddae
