#pragma once

#include "graddae/dataset.hpp"
#include "graddae/experiment_config.hpp"
#include "graddae/results.hpp"

namespace graddae {

/// Reconstruction sweep over the stacked fraction f: for each f and each
/// train-validation split, pretrains the stack on the split's training part
/// and scores relative cross-entropy on the test set. Emits per-epoch
/// training curves, one final row per run and mean/SE summary rows per f.
std::vector<ResultRecord> sweep_f(const ExperimentConfig& config);

/// Classification sweep over training-set size for f in {0, 1}: subset,
/// pretrain, fine-tune, score test error. Emits per-run rows, per-cell
/// mean/SE and one percentage-improvement row (f=0 over f=1) per size.
std::vector<ResultRecord> sweep_train_size(const ExperimentConfig& config);

struct GridPoint {
    double learning_rate = 0.0;
    std::size_t batch_size = 0;
    double momentum = 0.0;
    double weight_decay = 0.0;
};

struct GridSearchResult {
    GridPoint best;
    double best_score = 0.0;
    std::vector<ResultRecord> records;
};

/// Scores every point of the hyperparameter grid on one inner holdout of
/// the training data; the argmin wins, ties broken by grid order.
GridSearchResult grid_search(const ExperimentConfig& config);

/// Single pretraining run with the config's fraction f; reports training
/// curves and, when a test pair is configured, the final relative
/// cross-entropy.
std::vector<ResultRecord> run_pretrain(const ExperimentConfig& config);

/// Dataset-level metrics of the configured test pair, including its entropy
/// floor (the minimum achievable reconstruction cross-entropy).
std::vector<ResultRecord> evaluate_dataset(const ExperimentConfig& config);

}  // namespace graddae
