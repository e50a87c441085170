#pragma once

#include "dixkit/matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dixkit::predict {

/// Per-sample class probabilities produced by one model.
///
/// Invariants (enforced by validate()): N >= 1 rows, m >= 2 classes, every
/// entry in [0, 1], every row summing to 1 within kRowSumTolerance, unique
/// sample ids and class names.
struct ProbabilityMatrix {
    std::string model_name;
    std::vector<std::string> class_names;
    std::vector<std::string> sample_ids;
    Matrix rows;

    [[nodiscard]] std::size_t samples() const noexcept { return rows.rows(); }
    [[nodiscard]] std::size_t classes() const noexcept { return rows.cols(); }
};

inline constexpr double kRowSumTolerance = 1e-6;
inline constexpr double kRenormalizeTolerance = 1e-3;

void validate(const ProbabilityMatrix &pm);

struct ParseOptions {
    /// Rescale rows whose sum is off by more than kRowSumTolerance but within
    /// kRenormalizeTolerance. Rows within kRowSumTolerance are never touched.
    bool renormalize = false;
};

/// File grammar:
///
///     file     := { meta | blank } header { row | blank | meta }
///     meta     := '#' key '=' value        (model=<name>, classes=<c1,...>)
///     header   := 'sample_id' { ',' class_name }   (at least two classes)
///     row      := sample_id { ',' decimal }        (one value per class)
///
/// When `# classes=` is present it must equal the header's class list. The
/// model name defaults to `default_model_name` when no `# model=` line exists.
ProbabilityMatrix parse_probability_text(std::istream &in, const std::string &source,
                                         const std::string &default_model_name, ParseOptions options = {});

/// Model name defaults to the file stem.
ProbabilityMatrix parse_probability_file(const std::filesystem::path &path, ParseOptions options = {});

/// Writes the format above with shortest round-trip decimals.
void write_probability(std::ostream &out, const ProbabilityMatrix &pm);

/// Aligned models: identical ordered class names and sample ids.
class ModelBundle {
  public:
    [[nodiscard]] const std::vector<ProbabilityMatrix> &models() const noexcept { return models_; }
    [[nodiscard]] std::size_t size() const noexcept { return models_.size(); }
    [[nodiscard]] const std::vector<std::string> &class_names() const noexcept { return models_.front().class_names; }
    [[nodiscard]] const std::vector<std::string> &sample_ids() const noexcept { return models_.front().sample_ids; }
    [[nodiscard]] std::size_t samples() const noexcept { return models_.front().samples(); }
    [[nodiscard]] std::size_t classes() const noexcept { return models_.front().classes(); }

  private:
    friend ModelBundle assemble_bundle(std::vector<ProbabilityMatrix> matrices);
    std::vector<ProbabilityMatrix> models_;
};

/// Throws DataError on an empty list, class-name mismatch or sample-id
/// mismatch (order-sensitive; nothing is reordered).
ModelBundle assemble_bundle(std::vector<ProbabilityMatrix> matrices);

}  // namespace dixkit::predict
