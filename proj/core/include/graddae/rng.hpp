#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace graddae {

/// Seeded deterministic generator. Floating-point draws are mapped from the
/// raw 64-bit stream with fixed arithmetic rather than std:: distributions,
/// whose output is implementation-defined; the same seed therefore yields
/// the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in {0, ..., n-1}. n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent seed for a named substream. Canonical derivation
/// keeps runs reproducible no matter in which order they execute.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t substream = 0) {
    return splitmix64(splitmix64(base ^ 0xA5A5A5A55A5A5A5AULL) ^ splitmix64(stream) ^
                      splitmix64(~substream));
}

/// Identity permutation 0..n-1.
inline std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// Stream tags for derive_seed, so unrelated consumers of the same base seed
/// never share a stream.
namespace seed_stream {
inline constexpr std::uint64_t kSplit = 1;
inline constexpr std::uint64_t kSubset = 2;
inline constexpr std::uint64_t kRun = 3;
inline constexpr std::uint64_t kGrid = 4;
inline constexpr std::uint64_t kEval = 5;
}  // namespace seed_stream

}  // namespace graddae
