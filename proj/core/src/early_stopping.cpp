#include "dixkit/early_stopping.hpp"

#include "dixkit/error.hpp"

namespace dixkit::nn {

EarlyStopping::EarlyStopping(std::size_t patience, double min_delta) : patience_(patience), min_delta_(min_delta) {
    if (patience == 0) {
        throw InvalidArgument("early-stopping patience must be at least 1");
    }
    if (!(min_delta >= 0.0)) {
        throw InvalidArgument("early-stopping min_delta must be non-negative");
    }
}

bool EarlyStopping::update(std::size_t epoch, double metric) {
    if (state_.stopped) {
        return false;
    }
    // the first non-NaN metric always counts; NaN never improves
    if (metric < state_.best_metric - min_delta_ || (state_.best_epoch == 0 && metric == metric)) {
        state_.best_metric = metric;
        state_.best_epoch = epoch;
        state_.epochs_since_improvement = 0;
        return true;
    }
    ++state_.epochs_since_improvement;
    if (state_.epochs_since_improvement >= patience_) {
        state_.stopped = true;
    }
    return false;
}

}  // namespace dixkit::nn
