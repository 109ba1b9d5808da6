#pragma once

#include "graddae/matrix.hpp"
#include "graddae/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace graddae {

/// Labeled dataset: one sample per row, pixel values scaled to [0, 1].
struct Dataset {
    Matrix inputs;            // N x D
    std::vector<int> labels;  // class ids in [0, num_classes)
    int num_classes = 0;

    std::size_t size() const { return inputs.rows(); }
    std::size_t dim() const { return inputs.cols(); }
};

struct SplitSpec {
    std::size_t n_splits = 3;
    double validation_fraction = 0.1;
    std::uint64_t seed = 0;
};

struct TrainValSplit {
    Dataset train;
    Dataset validation;
};

/// Parses a big-endian IDX image/label pair (magic 2051 / 2049), checks the
/// sample counts agree, flattens images and scales bytes by 1/255.
Dataset load_mnist_idx(const std::filesystem::path& images_path,
                       const std::filesystem::path& labels_path);

/// Copies the given rows (and labels) into a new dataset.
Dataset take_samples(const Dataset& ds, std::span<const std::size_t> indices);

/// Class-uniform random subset: per-class counts differ by at most one, the
/// remainder going to the lowest class ids; selection within a class is
/// uniform and the output order is shuffled.
Dataset uniform_subset(const Dataset& ds, std::size_t size, Rng& rng);

/// Independent seeded shuffles of the dataset, each partitioned into
/// disjoint (train, validation) parts. Split i is a pure function of
/// (spec.seed, i).
std::vector<TrainValSplit> make_splits(const Dataset& ds, const SplitSpec& spec);

}  // namespace graddae
