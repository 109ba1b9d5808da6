#include "graddae/budget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graddae {

PhasePlan allocate_budget(std::size_t total_units, double fraction, std::size_t stage) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw std::invalid_argument("allocate_budget: fraction " + std::to_string(fraction) +
                                    " outside [0, 1]");
    if (stage == 0) throw std::invalid_argument("allocate_budget: stage must be at least 1");

    const auto n = static_cast<long long>(total_units);
    long long s = std::llround(fraction * static_cast<double>(n));
    // Nearest integer, then shrink s until the gradual remainder divides by
    // the per-epoch cost.
    s -= (n - s) % static_cast<long long>(stage);
    if (s < 0)
        throw std::invalid_argument("allocate_budget: no feasible split of " +
                                    std::to_string(total_units) + " units at stage " +
                                    std::to_string(stage));
    const long long g = (n - s) / static_cast<long long>(stage);

    PhasePlan plan;
    plan.stage = stage;
    plan.stacked_epochs = static_cast<std::size_t>(s);
    plan.gradual_epochs = static_cast<std::size_t>(g);
    plan.total_budget = total_units;
    plan.fraction = n > 0 ? static_cast<double>(s) / static_cast<double>(n) : 0.0;
    return plan;
}

void BudgetLedger::charge(EpochKind kind, std::size_t units) {
    if (consumed_ + units > total_)
        throw std::runtime_error("BudgetLedger: charging " + std::to_string(units) +
                                 " units would overdraw budget (" + std::to_string(consumed_) +
                                 "/" + std::to_string(total_) + " consumed)");
    consumed_ += units;
    entries_.emplace_back(kind, units);
}

}  // namespace graddae
