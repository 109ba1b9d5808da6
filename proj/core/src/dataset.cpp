#include "graddae/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace graddae {

namespace {

constexpr std::uint32_t kImagesMagic = 2051;  // 0x00000803
constexpr std::uint32_t kLabelsMagic = 2049;  // 0x00000801

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    return bytes;
}

std::uint32_t read_u32_be(const std::vector<unsigned char>& b, std::size_t off) {
    return (std::uint32_t(b[off]) << 24) | (std::uint32_t(b[off + 1]) << 16) |
           (std::uint32_t(b[off + 2]) << 8) | std::uint32_t(b[off + 3]);
}

}  // namespace

Dataset load_mnist_idx(const std::filesystem::path& images_path,
                       const std::filesystem::path& labels_path) {
    const auto img = read_file(images_path);
    if (img.size() < 16) throw std::runtime_error(images_path.string() + ": truncated header");
    if (read_u32_be(img, 0) != kImagesMagic)
        throw std::runtime_error(images_path.string() + ": bad magic " +
                                 std::to_string(read_u32_be(img, 0)) + " (expected 2051)");
    const std::size_t n = read_u32_be(img, 4);
    const std::size_t rows = read_u32_be(img, 8);
    const std::size_t cols = read_u32_be(img, 12);
    const std::size_t dim = rows * cols;
    if (img.size() != 16 + n * dim)
        throw std::runtime_error(images_path.string() + ": truncated file (" +
                                 std::to_string(img.size()) + " bytes, expected " +
                                 std::to_string(16 + n * dim) + ")");

    const auto lab = read_file(labels_path);
    if (lab.size() < 8) throw std::runtime_error(labels_path.string() + ": truncated header");
    if (read_u32_be(lab, 0) != kLabelsMagic)
        throw std::runtime_error(labels_path.string() + ": bad magic " +
                                 std::to_string(read_u32_be(lab, 0)) + " (expected 2049)");
    const std::size_t n_labels = read_u32_be(lab, 4);
    if (lab.size() != 8 + n_labels)
        throw std::runtime_error(labels_path.string() + ": truncated file");
    if (n_labels != n)
        throw std::runtime_error("image/label count mismatch: " + std::to_string(n) +
                                 " images vs " + std::to_string(n_labels) + " labels");

    Dataset ds;
    ds.inputs = Matrix(n, dim);
    for (std::size_t i = 0; i < n * dim; ++i)
        ds.inputs.data()[i] = static_cast<double>(img[16 + i]) / 255.0;
    ds.labels.resize(n);
    int max_label = -1;
    for (std::size_t i = 0; i < n; ++i) {
        ds.labels[i] = static_cast<int>(lab[8 + i]);
        max_label = std::max(max_label, ds.labels[i]);
    }
    ds.num_classes = max_label + 1;
    return ds;
}

Dataset take_samples(const Dataset& ds, std::span<const std::size_t> indices) {
    Dataset out;
    out.inputs = take_rows(ds.inputs, indices);
    out.labels.reserve(indices.size());
    for (std::size_t idx : indices) out.labels.push_back(ds.labels[idx]);
    out.num_classes = ds.num_classes;
    return out;
}

Dataset uniform_subset(const Dataset& ds, std::size_t size, Rng& rng) {
    if (size > ds.size())
        throw std::invalid_argument("uniform_subset: requested " + std::to_string(size) +
                                    " samples from a dataset of " + std::to_string(ds.size()));
    if (ds.num_classes <= 0) throw std::invalid_argument("uniform_subset: dataset has no classes");
    const auto c = static_cast<std::size_t>(ds.num_classes);

    std::vector<std::vector<std::size_t>> by_class(c);
    for (std::size_t i = 0; i < ds.size(); ++i)
        by_class[static_cast<std::size_t>(ds.labels[i])].push_back(i);

    std::vector<std::size_t> chosen;
    chosen.reserve(size);
    for (std::size_t cls = 0; cls < c; ++cls) {
        const std::size_t want = size / c + (cls < size % c ? 1 : 0);
        auto& pool = by_class[cls];
        if (pool.size() < want)
            throw std::invalid_argument("uniform_subset: class " + std::to_string(cls) +
                                        " has only " + std::to_string(pool.size()) +
                                        " samples, need " + std::to_string(want));
        rng.shuffle(pool);
        chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
    }
    rng.shuffle(chosen);
    return take_samples(ds, chosen);
}

std::vector<TrainValSplit> make_splits(const Dataset& ds, const SplitSpec& spec) {
    if (spec.n_splits == 0) throw std::invalid_argument("make_splits: n_splits must be >= 1");
    const std::size_t n = ds.size();
    const auto n_val = static_cast<std::size_t>(
        std::llround(spec.validation_fraction * static_cast<double>(n)));
    if (n_val < 1 || n_val >= n)
        throw std::invalid_argument("make_splits: validation fraction " +
                                    std::to_string(spec.validation_fraction) +
                                    " leaves an empty side for " + std::to_string(n) + " samples");

    std::vector<TrainValSplit> splits;
    splits.reserve(spec.n_splits);
    for (std::size_t i = 0; i < spec.n_splits; ++i) {
        Rng rng(derive_seed(spec.seed, seed_stream::kSplit, i));
        auto perm = iota_indices(n);
        rng.shuffle(perm);
        const std::span<const std::size_t> all(perm);
        splits.push_back(TrainValSplit{take_samples(ds, all.first(n - n_val)),
                                       take_samples(ds, all.last(n_val))});
    }
    return splits;
}

}  // namespace graddae
