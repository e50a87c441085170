#include "dixkit/ensemble.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dixkit::ensemble {

const char *to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::sum_of_probabilities: return "sum_of_probabilities";
        case Strategy::weighted_sum: return "weighted_sum";
        case Strategy::majority_vote: return "majority_vote";
    }
    return "?";
}

Strategy parse_strategy(const std::string &name) {
    if (name == "sum_of_probabilities" || name == "sop") return Strategy::sum_of_probabilities;
    if (name == "weighted_sum" || name == "weighted") return Strategy::weighted_sum;
    if (name == "majority_vote" || name == "majority") return Strategy::majority_vote;
    throw InvalidArgument(fmt::format("unknown ensemble strategy '{}'", name));
}

bool scores_tied(double a, double b) noexcept {
    return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

ArgmaxResult argmax(std::span<const double> scores) noexcept {
    ArgmaxResult best;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best.index] && !scores_tied(scores[i], scores[best.index])) {
            best.index = i;
        }
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i != best.index && scores_tied(scores[i], scores[best.index])) {
            best.tied = true;
            break;
        }
    }
    return best;
}

namespace {

EnsembleResult make_result(const predict::ModelBundle &bundle) {
    EnsembleResult result;
    result.class_names = bundle.class_names();
    result.sample_ids = bundle.sample_ids();
    result.raw_sums = Matrix(bundle.samples(), bundle.classes());
    result.normalized = Matrix(bundle.samples(), bundle.classes());
    result.predictions.assign(bundle.samples(), 0);
    result.ties.assign(bundle.samples(), false);
    return result;
}

// Accumulates models in index order so the floating-point sum is reproducible.
Matrix accumulate(const predict::ModelBundle &bundle, std::span<const double> weights) {
    Matrix sums(bundle.samples(), bundle.classes());
    for (std::size_t j = 0; j < bundle.size(); ++j) {
        const Matrix &probs = bundle.models()[j].rows;
        for (std::size_t k = 0; k < sums.size(); ++k) {
            sums.flat()[k] += weights[j] * probs.flat()[k];
        }
    }
    return sums;
}

void normalize_rows(const Matrix &raw, Matrix &normalized) {
    for (std::size_t r = 0; r < raw.rows(); ++r) {
        double total = 0.0;
        for (double v : raw.row(r)) {
            total += v;
        }
        for (std::size_t c = 0; c < raw.cols(); ++c) {
            normalized(r, c) = raw(r, c) / total;
        }
    }
}

EnsembleResult score_and_predict(const predict::ModelBundle &bundle, std::span<const double> weights) {
    EnsembleResult result = make_result(bundle);
    result.raw_sums = accumulate(bundle, weights);
    normalize_rows(result.raw_sums, result.normalized);
    for (std::size_t r = 0; r < bundle.samples(); ++r) {
        const ArgmaxResult best = argmax(result.raw_sums.row(r));
        result.predictions[r] = best.index;
        result.ties[r] = best.tied;
    }
    return result;
}

}  // namespace

EnsembleResult sum_of_probabilities(const predict::ModelBundle &bundle) {
    const std::vector<double> ones(bundle.size(), 1.0);
    return score_and_predict(bundle, ones);
}

EnsembleResult weighted_sum(const predict::ModelBundle &bundle, std::span<const double> weights) {
    if (weights.size() != bundle.size()) {
        throw InvalidArgument(fmt::format("expected {} weights (one per model), got {}", bundle.size(), weights.size()));
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidArgument(fmt::format("ensemble weights must be finite and non-negative (got {})", w));
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw InvalidArgument("ensemble weights must not all be zero");
    }
    return score_and_predict(bundle, weights);
}

EnsembleResult majority_vote(const predict::ModelBundle &bundle) {
    const EnsembleResult sop = sum_of_probabilities(bundle);
    EnsembleResult result = make_result(bundle);
    for (std::size_t r = 0; r < bundle.samples(); ++r) {
        auto votes = result.raw_sums.row(r);
        for (const auto &model : bundle.models()) {
            votes[argmax(model.rows.row(r)).index] += 1.0;
        }
        const double top = *std::max_element(votes.begin(), votes.end());
        std::size_t winner = bundle.classes();
        std::size_t contenders = 0;
        for (std::size_t c = 0; c < votes.size(); ++c) {
            if (votes[c] != top) {
                continue;
            }
            ++contenders;
            if (winner == bundle.classes() ||
                (sop.raw_sums(r, c) > sop.raw_sums(r, winner) && !scores_tied(sop.raw_sums(r, c), sop.raw_sums(r, winner)))) {
                winner = c;
            }
        }
        result.predictions[r] = winner;
        result.ties[r] = contenders > 1;
    }
    normalize_rows(result.raw_sums, result.normalized);
    return result;
}

EnsembleResult combine(const predict::ModelBundle &bundle, const EnsembleConfig &config) {
    switch (config.strategy) {
        case Strategy::sum_of_probabilities: return sum_of_probabilities(bundle);
        case Strategy::weighted_sum:
            if (!config.weights) {
                throw InvalidArgument("weighted_sum requires weights");
            }
            return weighted_sum(bundle, *config.weights);
        case Strategy::majority_vote: return majority_vote(bundle);
    }
    throw InvalidArgument("unknown ensemble strategy");
}

predict::ProbabilityMatrix to_probability_matrix(const EnsembleResult &result, const std::string &model_name) {
    return predict::ProbabilityMatrix{ model_name, result.class_names, result.sample_ids, result.normalized };
}

void write_predictions(std::ostream &out, const EnsembleResult &result) {
    out << "# classes=" << csv::join(result.class_names) << '\n';
    out << "sample_id,predicted_label,tie_flag\n";
    for (std::size_t r = 0; r < result.predictions.size(); ++r) {
        out << csv::join({ result.sample_ids[r], result.class_names[result.predictions[r]], result.ties[r] ? "1" : "0" })
            << '\n';
    }
}

}  // namespace dixkit::ensemble
