#include "graddae/experiments.hpp"

#include "graddae/classifier.hpp"
#include "graddae/fine_tuning.hpp"
#include "graddae/pretraining.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace graddae {

namespace {

Dataset load_train(const ExperimentConfig& c) {
    if (c.images.empty() || c.labels.empty())
        throw std::invalid_argument("missing dataset path: images/labels required");
    return load_mnist_idx(c.images, c.labels);
}

Dataset load_test(const ExperimentConfig& c) {
    if (c.test_images.empty() || c.test_labels.empty())
        throw std::invalid_argument("missing dataset path: test_images/test_labels required");
    return load_mnist_idx(c.test_images, c.test_labels);
}

/// Subsets are drawn once per (size, seed) and then split.
Dataset draw_subset(const Dataset& full, std::size_t size, std::uint64_t seed) {
    if (size == 0 || size == full.size()) return full;
    Rng rng(derive_seed(seed, seed_stream::kSubset, size));
    return uniform_subset(full, size, rng);
}

std::vector<StageSpec> stages_for(const ExperimentConfig& c, double f) {
    std::vector<StageSpec> stages;
    stages.reserve(c.hidden_sizes.size());
    for (std::size_t i = 0; i < c.hidden_sizes.size(); ++i)
        stages.push_back(StageSpec{c.hidden_sizes[i], i == 0 ? c.stage1_epochs : c.stage2_budget,
                                   f});
    return stages;
}

SgdHyper hyper_of(const ExperimentConfig& c) {
    return SgdHyper{c.learning_rate, c.batch_size, c.momentum, c.weight_decay};
}

CorruptionSpec noise_of(const ExperimentConfig& c) {
    return CorruptionSpec{NoiseKind::masking, c.corruption_rate};
}

void append_stage_curves(std::vector<ResultRecord>& records, const ResultRecord& base,
                         const PretrainResult& pre) {
    for (const StageRun& stage : pre.stages) {
        for (const EpochPoint& p : stage.curve) {
            ResultRecord r = base;
            r.phase = "stage" + std::to_string(p.stage);
            r.epoch = p.epoch;
            r.metric = "train_bce";
            r.value = p.train_loss;
            records.push_back(std::move(r));
        }
    }
}

std::string f_tag(double f) { return "f" + format_double(f); }

}  // namespace

std::vector<ResultRecord> sweep_f(const ExperimentConfig& config) {
    const Dataset test = load_test(config);
    Dataset train_full = load_train(config);
    const Dataset subset = draw_subset(train_full, config.subset_size, config.seed);
    train_full = Dataset{};  // keep peak memory down
    const std::size_t train_size = subset.size();
    const auto splits =
        make_splits(subset, SplitSpec{config.n_splits, config.validation_fraction, config.seed});

    std::vector<ResultRecord> records;
    std::vector<ResultRecord> summaries;
    for (std::size_t fi = 0; fi < config.f_values.size(); ++fi) {
        const double f = config.f_values[fi];
        std::vector<double> finals;
        for (std::size_t s = 0; s < splits.size(); ++s) {
            // Seeded per split, not per f: every fraction starts from the
            // same initialization and data order, so schedules compare
            // paired.
            const std::uint64_t run_seed =
                derive_seed(config.seed, seed_stream::kRun, s);
            Rng rng(run_seed);
            const PretrainResult pre =
                pretrain_stack(subset.dim(), stages_for(config, f), splits[s].train.inputs,
                               noise_of(config), hyper_of(config), rng);
            const double rel =
                relative_ce(pre.encoder, pre.decoder, test.inputs, noise_of(config), rng);
            finals.push_back(rel);

            ResultRecord base;
            base.run_id = f_tag(f) + "_s" + std::to_string(s);
            base.f = f;
            base.train_size = train_size;
            base.split = static_cast<int>(s);
            base.seed = run_seed;
            append_stage_curves(records, base, pre);
            base.phase = "final";
            base.metric = "relative_ce";
            base.value = rel;
            records.push_back(base);
        }
        const MeanSe agg = mean_se(finals);
        ResultRecord sum;
        sum.run_id = f_tag(f);
        sum.phase = "summary";
        sum.f = f;
        sum.train_size = train_size;
        sum.seed = config.seed;
        sum.metric = "relative_ce_mean";
        sum.value = agg.mean;
        summaries.push_back(sum);
        sum.metric = "relative_ce_se";
        sum.value = agg.se;
        summaries.push_back(sum);
    }
    records.insert(records.end(), summaries.begin(), summaries.end());
    return records;
}

std::vector<ResultRecord> sweep_train_size(const ExperimentConfig& config) {
    const Dataset test = load_test(config);
    const Dataset train_full = load_train(config);
    const double f_grid[2] = {0.0, 1.0};

    std::vector<ResultRecord> records;
    std::vector<ResultRecord> summaries;
    for (std::size_t si = 0; si < config.train_sizes.size(); ++si) {
        const std::size_t size = config.train_sizes[si];
        const Dataset subset = draw_subset(train_full, size, config.seed);
        const auto splits = make_splits(
            subset, SplitSpec{config.n_splits, config.validation_fraction,
                              derive_seed(config.seed, seed_stream::kSplit, size)});

        double cell_mean[2] = {0.0, 0.0};
        for (std::size_t fi = 0; fi < 2; ++fi) {
            const double f = f_grid[fi];
            std::vector<double> errors;
            for (std::size_t s = 0; s < splits.size(); ++s) {
                // Per (size, split), shared across f: schedules compare
                // paired from the same initialization.
                const std::uint64_t run_seed =
                    derive_seed(config.seed, seed_stream::kRun,
                                (static_cast<std::uint64_t>(si) << 32) |
                                    static_cast<std::uint64_t>(s));
                Rng rng(run_seed);
                const PretrainResult pre =
                    pretrain_stack(subset.dim(), stages_for(config, f), splits[s].train.inputs,
                                   noise_of(config), hyper_of(config), rng);
                const FineTuneResult tuned =
                    fine_tune(pre.encoder, splits[s].train, splits[s].validation,
                              hyper_of(config), config.patience, config.max_finetune_epochs, rng);
                const double test_err =
                    classification_error(tuned.net, test.inputs, test.labels);
                errors.push_back(test_err);

                ResultRecord base;
                base.run_id = "n" + std::to_string(size) + "_" + f_tag(f) + "_s" +
                              std::to_string(s);
                base.f = f;
                base.train_size = size;
                base.split = static_cast<int>(s);
                base.seed = run_seed;
                append_stage_curves(records, base, pre);
                base.phase = "finetune";
                for (std::size_t e = 0; e < tuned.val_errors.size(); ++e) {
                    base.epoch = e;
                    base.metric = "val_error";
                    base.value = tuned.val_errors[e];
                    records.push_back(base);
                }
                base.phase = "final";
                base.epoch = 0;
                base.metric = "test_error";
                base.value = test_err;
                records.push_back(base);
            }
            const MeanSe agg = mean_se(errors);
            cell_mean[fi] = agg.mean;
            ResultRecord sum;
            sum.run_id = "n" + std::to_string(size) + "_" + f_tag(f);
            sum.phase = "summary";
            sum.f = f;
            sum.train_size = size;
            sum.seed = config.seed;
            sum.metric = "test_error_mean";
            sum.value = agg.mean;
            summaries.push_back(sum);
            sum.metric = "test_error_se";
            sum.value = agg.se;
            summaries.push_back(sum);
        }
        // Relative error reduction of pure gradual (f=0) over pure stacked
        // (f=1), in percent.
        ResultRecord imp;
        imp.run_id = "n" + std::to_string(size);
        imp.phase = "summary";
        imp.train_size = size;
        imp.seed = config.seed;
        imp.metric = "improvement_pct";
        imp.value = improvement_pct(cell_mean[1], cell_mean[0]);
        summaries.push_back(imp);
    }
    records.insert(records.end(), summaries.begin(), summaries.end());
    return records;
}

GridSearchResult grid_search(const ExperimentConfig& config) {
    const auto lrs = config.grid_learning_rates.empty()
                         ? std::vector<double>{config.learning_rate}
                         : config.grid_learning_rates;
    const auto batches = config.grid_batch_sizes.empty()
                             ? std::vector<std::size_t>{config.batch_size}
                             : config.grid_batch_sizes;
    const auto moms = config.grid_momentums.empty() ? std::vector<double>{config.momentum}
                                                    : config.grid_momentums;
    const auto decays = config.grid_weight_decays.empty()
                            ? std::vector<double>{config.weight_decay}
                            : config.grid_weight_decays;

    Dataset train_full = load_train(config);
    const Dataset subset = draw_subset(train_full, config.subset_size, config.seed);
    train_full = Dataset{};
    // One inner holdout of the training data scores every grid point.
    const auto inner = make_splits(
        subset, SplitSpec{1, config.validation_fraction,
                          derive_seed(config.seed, seed_stream::kGrid, 0)})[0];

    GridSearchResult result;
    result.best_score = std::numeric_limits<double>::infinity();
    std::size_t point_index = 0;
    for (double lr : lrs)
        for (std::size_t bs : batches)
            for (double mom : moms)
                for (double wd : decays) {
                    const GridPoint point{lr, bs, mom, wd};
                    const SgdHyper hyper{lr, bs, mom, wd};
                    const std::uint64_t run_seed =
                        derive_seed(config.seed, seed_stream::kGrid, point_index + 1);
                    Rng rng(run_seed);
                    const PretrainResult pre =
                        pretrain_stack(subset.dim(), stages_for(config, config.f),
                                       inner.train.inputs, noise_of(config), hyper, rng);
                    double score = 0.0;
                    if (config.grid_objective == GridObjective::classification) {
                        const FineTuneResult tuned =
                            fine_tune(pre.encoder, inner.train, inner.validation, hyper,
                                      config.patience, config.max_finetune_epochs, rng);
                        score = tuned.best_val_error;
                    } else {
                        score = relative_ce(pre.encoder, pre.decoder, inner.validation.inputs,
                                            noise_of(config), rng);
                    }
                    if (score < result.best_score) {
                        result.best_score = score;
                        result.best = point;
                    }

                    ResultRecord r;
                    r.run_id = "lr" + format_double(lr) + "_bs" + std::to_string(bs) + "_m" +
                               format_double(mom) + "_wd" + format_double(wd);
                    r.phase = "grid";
                    r.f = config.f;
                    r.train_size = subset.size();
                    r.split = 0;
                    r.seed = run_seed;
                    r.metric = "grid_score";
                    r.value = score;
                    result.records.push_back(std::move(r));
                    ++point_index;
                }

    ResultRecord best;
    best.run_id = "best";
    best.phase = "summary";
    best.f = config.f;
    best.train_size = subset.size();
    best.seed = config.seed;
    best.metric = "grid_score";
    best.value = result.best_score;
    result.records.push_back(best);
    best.metric = "best_learning_rate";
    best.value = result.best.learning_rate;
    result.records.push_back(best);
    best.metric = "best_batch_size";
    best.value = static_cast<double>(result.best.batch_size);
    result.records.push_back(best);
    best.metric = "best_momentum";
    best.value = result.best.momentum;
    result.records.push_back(best);
    best.metric = "best_weight_decay";
    best.value = result.best.weight_decay;
    result.records.push_back(best);
    return result;
}

std::vector<ResultRecord> run_pretrain(const ExperimentConfig& config) {
    Dataset train_full = load_train(config);
    const Dataset subset = draw_subset(train_full, config.subset_size, config.seed);
    train_full = Dataset{};

    const std::uint64_t run_seed = derive_seed(config.seed, seed_stream::kRun, 0);
    Rng rng(run_seed);
    const PretrainResult pre =
        pretrain_stack(subset.dim(), stages_for(config, config.f), subset.inputs,
                       noise_of(config), hyper_of(config), rng);

    std::vector<ResultRecord> records;
    ResultRecord base;
    base.run_id = "pretrain_" + f_tag(config.f);
    base.f = config.f;
    base.train_size = subset.size();
    base.split = 0;
    base.seed = run_seed;
    append_stage_curves(records, base, pre);
    if (!config.test_images.empty() && !config.test_labels.empty()) {
        const Dataset test = load_test(config);
        base.phase = "final";
        base.metric = "relative_ce";
        base.value = relative_ce(pre.encoder, pre.decoder, test.inputs, noise_of(config), rng);
        records.push_back(base);
    }
    return records;
}

std::vector<ResultRecord> evaluate_dataset(const ExperimentConfig& config) {
    const Dataset test = load_test(config);

    std::vector<ResultRecord> records;
    ResultRecord base;
    base.run_id = "eval";
    base.phase = "eval";
    base.train_size = test.size();
    base.seed = config.seed;

    base.metric = "n_samples";
    base.value = static_cast<double>(test.size());
    records.push_back(base);
    base.metric = "n_features";
    base.value = static_cast<double>(test.dim());
    records.push_back(base);
    base.metric = "n_classes";
    base.value = static_cast<double>(test.num_classes);
    records.push_back(base);
    base.metric = "entropy_floor";
    base.value = entropy_floor(test.inputs);
    records.push_back(base);
    for (int c = 0; c < test.num_classes; ++c) {
        std::size_t count = 0;
        for (int label : test.labels) count += label == c;
        base.metric = "label_count_" + std::to_string(c);
        base.value = static_cast<double>(count);
        records.push_back(base);
    }
    return records;
}

}  // namespace graddae
