#pragma once

#include "dixkit/matrix.hpp"
#include "dixkit/probability.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dixkit::ensemble {

enum class Strategy { sum_of_probabilities, weighted_sum, majority_vote };

[[nodiscard]] const char *to_string(Strategy s) noexcept;
[[nodiscard]] Strategy parse_strategy(const std::string &name);  // throws InvalidArgument

/// Ties always resolve to the lowest class index.
struct EnsembleConfig {
    Strategy strategy = Strategy::sum_of_probabilities;
    std::optional<std::vector<double>> weights;  // weighted_sum only
};

struct EnsembleResult {
    std::vector<std::string> class_names;
    std::vector<std::string> sample_ids;
    /// Per-class aggregate: sum of (weighted) probabilities, or vote counts for
    /// majority_vote.
    Matrix raw_sums;
    /// raw_sums divided row-wise by the row total, so each row sums to 1.
    Matrix normalized;
    std::vector<std::size_t> predictions;
    /// True when the winning score was shared by another class.
    std::vector<bool> ties;
};

/// Two scores within this relative distance are treated as tied. Keeps
/// decisions independent of summation rounding (0.1 + 0.2 vs 0.3).
inline constexpr double kTieTolerance = 1e-12;

[[nodiscard]] bool scores_tied(double a, double b) noexcept;

struct ArgmaxResult {
    std::size_t index = 0;
    bool tied = false;
};

/// Index of the maximal score; among tied maxima the lowest index wins.
[[nodiscard]] ArgmaxResult argmax(std::span<const double> scores) noexcept;

/// Unweighted sum of probabilities across models, normalized per sample by the
/// total over classes and models; predicts the class with the largest sum.
EnsembleResult sum_of_probabilities(const predict::ModelBundle &bundle);

/// As sum_of_probabilities with per-model weights w_j >= 0, sum > 0.
EnsembleResult weighted_sum(const predict::ModelBundle &bundle, std::span<const double> weights);

/// Each model votes its own argmax; the most-voted class wins. Vote ties
/// fall through to the sum-of-probabilities score, then the lowest index.
EnsembleResult majority_vote(const predict::ModelBundle &bundle);

EnsembleResult combine(const predict::ModelBundle &bundle, const EnsembleConfig &config);

/// Normalized scores as a probability matrix for predict::write_probability.
[[nodiscard]] predict::ProbabilityMatrix to_probability_matrix(const EnsembleResult &result,
                                                               const std::string &model_name = "ensemble");

/// `sample_id,predicted_label,tie_flag` with a leading `# classes=` line.
void write_predictions(std::ostream &out, const EnsembleResult &result);

}  // namespace dixkit::ensemble
