#pragma once

#include <cstddef>
#include <limits>
#include <utility>

namespace dixkit::nn {

struct EarlyStopState {
    double best_metric = std::numeric_limits<double>::infinity();
    std::size_t best_epoch = 0;  // 1-based; 0 before the first epoch
    std::size_t epochs_since_improvement = 0;
    bool stopped = false;
};

/// Patience bookkeeping on a lower-is-better metric. An epoch improves when
/// its metric is below best - min_delta; after `patience` consecutive epochs
/// without improvement the monitor stops.
class EarlyStopping {
  public:
    explicit EarlyStopping(std::size_t patience, double min_delta = 1e-6);

    /// Records one epoch and returns true if it is the new best.
    bool update(std::size_t epoch, double metric);

    [[nodiscard]] bool should_stop() const noexcept { return state_.stopped; }
    [[nodiscard]] const EarlyStopState &state() const noexcept { return state_; }
    [[nodiscard]] std::size_t patience() const noexcept { return patience_; }

  private:
    std::size_t patience_;
    double min_delta_;
    EarlyStopState state_;
};

struct EarlyStopOutcome {
    std::size_t epochs_run = 0;
    std::size_t best_epoch = 0;
    bool stopped_early = false;
};

/// Runs `epoch_fn(epoch, params) -> metric` for epochs 1..max_epochs until the
/// monitor stops, keeping a copy of the best parameters. On return `params`
/// holds the best-epoch parameters.
template <typename Params, typename EpochFn>
EarlyStopOutcome run_with_early_stopping(std::size_t max_epochs, EarlyStopping &monitor, Params &params, EpochFn &&epoch_fn) {
    Params best = params;
    EarlyStopOutcome outcome;
    for (std::size_t epoch = 1; epoch <= max_epochs; ++epoch) {
        const double metric = epoch_fn(epoch, params);
        outcome.epochs_run = epoch;
        if (monitor.update(epoch, metric)) {
            best = params;
        }
        if (monitor.should_stop()) {
            outcome.stopped_early = true;
            break;
        }
    }
    outcome.best_epoch = monitor.state().best_epoch;
    if (outcome.best_epoch > 0) {
        params = std::move(best);
    }
    return outcome;
}

}  // namespace dixkit::nn
