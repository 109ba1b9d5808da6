#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace graddae {

enum class GridObjective { classification, reconstruction };

/// Experiment settings, read from a flat key=value file. Defaults are the
/// reference setup: two hidden layers of 1000 units, 50 epochs for the
/// first stage, an 80-unit budget for the second, 15% masking noise,
/// patience 35 and 3 train-validation splits. Optimizer defaults are this
/// project's own choices.
struct ExperimentConfig {
    std::string images;        // training images (IDX)
    std::string labels;        // training labels (IDX)
    std::string test_images;
    std::string test_labels;

    std::size_t subset_size = 0;  // 0 = use the whole training set
    std::vector<std::size_t> hidden_sizes = {1000, 1000};
    std::size_t stage1_epochs = 50;
    std::size_t stage2_budget = 80;
    double f = 0.0;  // stacked fraction for single runs (pretrain, grid-search)
    std::vector<double> f_values = {0.0, 0.25, 0.5, 0.75, 1.0};
    double corruption_rate = 0.15;

    double learning_rate = 0.1;
    std::size_t batch_size = 20;
    double momentum = 0.0;
    double weight_decay = 0.0;

    std::size_t patience = 35;
    std::size_t max_finetune_epochs = 200;
    std::size_t n_splits = 3;
    double validation_fraction = 0.1;
    std::uint64_t seed = 1;

    std::vector<std::size_t> train_sizes = {1000, 5000, 10000, 25000, 50000};

    // Empty grid axes fall back to the corresponding single value above.
    std::vector<double> grid_learning_rates;
    std::vector<std::size_t> grid_batch_sizes;
    std::vector<double> grid_momentums;
    std::vector<double> grid_weight_decays;
    GridObjective grid_objective = GridObjective::classification;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parses a key=value config file. '#' starts a comment, blank lines are
/// skipped, keys not listed above are rejected, missing keys keep their
/// defaults.
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Applies one key=value assignment (also used for config text parsing).
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

ExperimentConfig parse_config_text(const std::string& text);

/// Emits every key; parse_config_text(emit_config(c)) == c.
std::string emit_config(const ExperimentConfig& config);

/// Range/sanity checks shared by parsing and the CLI.
void validate(const ExperimentConfig& config);

}  // namespace graddae
