#include "graddae/experiment_config.hpp"

#include "graddae/results.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graddae {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw std::invalid_argument("unparsable value for " + key + ": '" + value + "'");
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) bad_value(key, value);
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) bad_value(key, value);
    return out;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto len = (comma == std::string::npos ? value.size() : comma) - start;
        parts.push_back(trim(value.substr(start, len)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& part : split_list(value)) {
        if (part.empty()) bad_value(key, value);
        out.push_back(parse_double(key, part));
    }
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& key, const std::string& value) {
    std::vector<std::size_t> out;
    for (const auto& part : split_list(value)) {
        if (part.empty()) bad_value(key, value);
        out.push_back(parse_u64(key, part));
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        if constexpr (std::is_same_v<T, double>)
            out += format_double(values[i]);
        else
            out += std::to_string(values[i]);
    }
    return out;
}

void check_unit_interval(const char* what, double v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(what) + " out of range [0, 1]: " +
                                    format_double(v));
}

}  // namespace

void apply_config_entry(ExperimentConfig& c, const std::string& key, const std::string& value) {
    if (key == "images") c.images = value;
    else if (key == "labels") c.labels = value;
    else if (key == "test_images") c.test_images = value;
    else if (key == "test_labels") c.test_labels = value;
    else if (key == "subset_size") c.subset_size = parse_u64(key, value);
    else if (key == "hidden_sizes") c.hidden_sizes = parse_size_list(key, value);
    else if (key == "stage1_epochs") c.stage1_epochs = parse_u64(key, value);
    else if (key == "stage2_budget") c.stage2_budget = parse_u64(key, value);
    else if (key == "f") c.f = parse_double(key, value);
    else if (key == "f_values") c.f_values = parse_double_list(key, value);
    else if (key == "corruption_rate") c.corruption_rate = parse_double(key, value);
    else if (key == "learning_rate") c.learning_rate = parse_double(key, value);
    else if (key == "batch_size") c.batch_size = parse_u64(key, value);
    else if (key == "momentum") c.momentum = parse_double(key, value);
    else if (key == "weight_decay") c.weight_decay = parse_double(key, value);
    else if (key == "patience") c.patience = parse_u64(key, value);
    else if (key == "max_finetune_epochs") c.max_finetune_epochs = parse_u64(key, value);
    else if (key == "n_splits") c.n_splits = parse_u64(key, value);
    else if (key == "validation_fraction") c.validation_fraction = parse_double(key, value);
    else if (key == "seed") c.seed = parse_u64(key, value);
    else if (key == "train_sizes") c.train_sizes = parse_size_list(key, value);
    else if (key == "grid_learning_rates") c.grid_learning_rates = parse_double_list(key, value);
    else if (key == "grid_batch_sizes") c.grid_batch_sizes = parse_size_list(key, value);
    else if (key == "grid_momentums") c.grid_momentums = parse_double_list(key, value);
    else if (key == "grid_weight_decays") c.grid_weight_decays = parse_double_list(key, value);
    else if (key == "grid_objective") {
        if (value == "classification") c.grid_objective = GridObjective::classification;
        else if (value == "reconstruction") c.grid_objective = GridObjective::reconstruction;
        else bad_value(key, value);
    }
    else throw std::invalid_argument("unknown key: " + key);
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected key=value, got '" + line + "'");
        apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    validate(config);
    return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::string emit_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "images=" << c.images << "\n";
    out << "labels=" << c.labels << "\n";
    out << "test_images=" << c.test_images << "\n";
    out << "test_labels=" << c.test_labels << "\n";
    out << "subset_size=" << c.subset_size << "\n";
    out << "hidden_sizes=" << join(c.hidden_sizes) << "\n";
    out << "stage1_epochs=" << c.stage1_epochs << "\n";
    out << "stage2_budget=" << c.stage2_budget << "\n";
    out << "f=" << format_double(c.f) << "\n";
    out << "f_values=" << join(c.f_values) << "\n";
    out << "corruption_rate=" << format_double(c.corruption_rate) << "\n";
    out << "learning_rate=" << format_double(c.learning_rate) << "\n";
    out << "batch_size=" << c.batch_size << "\n";
    out << "momentum=" << format_double(c.momentum) << "\n";
    out << "weight_decay=" << format_double(c.weight_decay) << "\n";
    out << "patience=" << c.patience << "\n";
    out << "max_finetune_epochs=" << c.max_finetune_epochs << "\n";
    out << "n_splits=" << c.n_splits << "\n";
    out << "validation_fraction=" << format_double(c.validation_fraction) << "\n";
    out << "seed=" << c.seed << "\n";
    out << "train_sizes=" << join(c.train_sizes) << "\n";
    if (!c.grid_learning_rates.empty())
        out << "grid_learning_rates=" << join(c.grid_learning_rates) << "\n";
    if (!c.grid_batch_sizes.empty())
        out << "grid_batch_sizes=" << join(c.grid_batch_sizes) << "\n";
    if (!c.grid_momentums.empty())
        out << "grid_momentums=" << join(c.grid_momentums) << "\n";
    if (!c.grid_weight_decays.empty())
        out << "grid_weight_decays=" << join(c.grid_weight_decays) << "\n";
    out << "grid_objective="
        << (c.grid_objective == GridObjective::classification ? "classification"
                                                              : "reconstruction")
        << "\n";
    return out.str();
}

void validate(const ExperimentConfig& c) {
    check_unit_interval("corruption_rate", c.corruption_rate);
    check_unit_interval("f", c.f);
    if (c.f_values.empty()) throw std::invalid_argument("f_values must not be empty");
    for (double f : c.f_values) check_unit_interval("f_values entry", f);
    if (c.hidden_sizes.empty()) throw std::invalid_argument("hidden_sizes must not be empty");
    for (std::size_t h : c.hidden_sizes)
        if (h == 0) throw std::invalid_argument("hidden_sizes entries must be positive");
    if (!(c.learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be positive");
    if (!(c.momentum >= 0.0 && c.momentum < 1.0))
        throw std::invalid_argument("momentum out of range [0, 1)");
    if (c.weight_decay < 0.0) throw std::invalid_argument("weight_decay must be non-negative");
    if (c.batch_size == 0) throw std::invalid_argument("batch_size must be positive");
    if (c.n_splits == 0) throw std::invalid_argument("n_splits must be at least 1");
    if (!(c.validation_fraction > 0.0 && c.validation_fraction < 1.0))
        throw std::invalid_argument("validation_fraction out of range (0, 1)");
    for (std::size_t s : c.train_sizes)
        if (s == 0) throw std::invalid_argument("train_sizes entries must be positive");
    for (double v : c.grid_learning_rates)
        if (!(v > 0.0)) throw std::invalid_argument("grid_learning_rates must be positive");
    for (std::size_t v : c.grid_batch_sizes)
        if (v == 0) throw std::invalid_argument("grid_batch_sizes must be positive");
    for (double v : c.grid_momentums)
        if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("grid_momentums out of range");
    for (double v : c.grid_weight_decays)
        if (v < 0.0) throw std::invalid_argument("grid_weight_decays must be non-negative");
}

}  // namespace graddae
