#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace graddae {

/// One long-format result row. Aggregate rows use split = -1 and epoch = 0.
struct ResultRecord {
    std::string run_id;
    std::string phase;
    double f = 0.0;
    std::size_t train_size = 0;
    int split = -1;
    std::uint64_t seed = 0;
    std::size_t epoch = 0;
    std::string metric;
    double value = 0.0;
};

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

/// Long-format CSV with a fixed header and LF line endings. Byte output is a
/// pure function of the records.
std::string to_csv(std::span<const ResultRecord> records);

void write_csv(const std::filesystem::path& path, std::span<const ResultRecord> records);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;  // sample standard deviation / sqrt(n); 0 when n < 2
};

MeanSe mean_se(std::span<const double> values);

/// Relative error reduction of the f=0 schedule over the f=1 schedule, in
/// percent: (err_f1 - err_f0) / err_f1 * 100. Zero when err_f1 is zero.
inline double improvement_pct(double err_f1, double err_f0) {
    return err_f1 > 0.0 ? (err_f1 - err_f0) / err_f1 * 100.0 : 0.0;
}

}  // namespace graddae
