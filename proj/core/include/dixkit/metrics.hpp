#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dixkit::metrics {

/// m x m counts with rows = predicted class and columns = actual class, so
/// column c sums to the support of class c.
class ConfusionMatrix {
  public:
    explicit ConfusionMatrix(std::vector<std::string> class_names);

    /// Golden/ingested counts given row-major as counts[predicted][actual].
    static ConfusionMatrix from_counts(std::vector<std::string> class_names,
                                       const std::vector<std::vector<std::uint64_t>> &counts);

    void add(std::size_t actual, std::size_t predicted, std::uint64_t n = 1);

    [[nodiscard]] std::size_t classes() const noexcept { return names_.size(); }
    [[nodiscard]] const std::vector<std::string> &class_names() const noexcept { return names_; }
    [[nodiscard]] std::uint64_t count(std::size_t predicted, std::size_t actual) const noexcept {
        return counts_[predicted * names_.size() + actual];
    }

    [[nodiscard]] std::uint64_t true_positives(std::size_t c) const noexcept { return count(c, c); }
    /// Row sum: how often c was predicted.
    [[nodiscard]] std::uint64_t predicted_total(std::size_t c) const noexcept;
    /// Column sum: the support of c.
    [[nodiscard]] std::uint64_t support(std::size_t c) const noexcept;
    [[nodiscard]] std::uint64_t total() const noexcept;
    [[nodiscard]] std::uint64_t trace() const noexcept;

  private:
    std::vector<std::string> names_;
    std::vector<std::uint64_t> counts_;
};

/// Counts counts[pred][actual] per pair. Throws InvalidArgument on a length
/// mismatch, empty input or a label outside [0, m).
ConfusionMatrix build_confusion(std::span<const std::size_t> actual, std::span<const std::size_t> predicted,
                                std::vector<std::string> class_names);

/// A ratio that may be undefined (zero denominator). Undefined rates carry
/// value 0 so reports keep a fixed schema.
struct Rate {
    double value = 0.0;
    bool defined = true;
};

/// trace / total. Throws DataError on an empty matrix.
double accuracy(const ConfusionMatrix &cm);

/// TP / (TP + FP) = diagonal / row sum.
std::vector<Rate> precision_per_class(const ConfusionMatrix &cm);

/// TP / (TP + FN) = diagonal / column sum.
std::vector<Rate> recall_per_class(const ConfusionMatrix &cm);

/// Harmonic mean of precision and recall; undefined when both are 0 or either
/// is undefined.
std::vector<Rate> f1_per_class(const ConfusionMatrix &cm);

struct ClassMetrics {
    std::string name;
    Rate precision;
    Rate recall;
    Rate f1;
    std::uint64_t support = 0;
};

struct MetricReport {
    std::vector<ClassMetrics> per_class;
    double accuracy = 0.0;
    std::uint64_t correct = 0;
    std::uint64_t total = 0;
    /// Unweighted means over all classes (undefined entries count as 0).
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
};

MetricReport report_from_confusion(const ConfusionMatrix &cm);

MetricReport full_report(std::span<const std::size_t> actual, std::span<const std::size_t> predicted,
                         std::vector<std::string> class_names);

}  // namespace dixkit::metrics
