#pragma once

#include <cstddef>
#include <limits>

namespace graddae {

enum class StopSignal { keep_going, stop };

/// Patience-based early stopping over a lower-is-better validation metric.
/// An update that strictly improves on the best metric seen resets the
/// counter and snapshots the parameters; the stop signal fires once the
/// counter reaches the patience. The snapshot with the best metric is what
/// training returns, not the last parameters.
template <typename Params>
class EarlyStopping {
public:
    explicit EarlyStopping(std::size_t patience) : patience_(patience) {}

    StopSignal update(double metric, const Params& params) {
        if (metric < best_metric_) {
            best_metric_ = metric;
            best_ = params;
            epochs_since_best_ = 0;
        } else {
            ++epochs_since_best_;
        }
        return epochs_since_best_ >= patience_ ? StopSignal::stop : StopSignal::keep_going;
    }

    double best_metric() const { return best_metric_; }
    const Params& best() const { return best_; }
    std::size_t epochs_since_best() const { return epochs_since_best_; }
    std::size_t patience() const { return patience_; }

private:
    std::size_t patience_;
    double best_metric_ = std::numeric_limits<double>::infinity();
    std::size_t epochs_since_best_ = 0;
    Params best_{};
};

}  // namespace graddae
