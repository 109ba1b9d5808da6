#include "graddae/results.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace graddae {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string to_csv(std::span<const ResultRecord> records) {
    std::string out = "run_id,phase,f,train_size,split,seed,epoch,metric,value\n";
    for (const ResultRecord& r : records) {
        out += r.run_id;
        out += ',';
        out += r.phase;
        out += ',';
        out += format_double(r.f);
        out += ',';
        out += std::to_string(r.train_size);
        out += ',';
        out += std::to_string(r.split);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.epoch);
        out += ',';
        out += r.metric;
        out += ',';
        out += format_double(r.value);
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, std::span<const ResultRecord> records) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_csv(records);
}

MeanSe mean_se(std::span<const double> values) {
    MeanSe result;
    if (values.empty()) return result;
    double sum = 0.0;
    for (double v : values) sum += v;
    result.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return result;
    double ss = 0.0;
    for (double v : values) ss += (v - result.mean) * (v - result.mean);
    const double n = static_cast<double>(values.size());
    result.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return result;
}

}  // namespace graddae
