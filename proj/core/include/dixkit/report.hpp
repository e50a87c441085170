#pragma once

#include "dixkit/metrics.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace dixkit::report {

/// Ratio as a percentage string rounded half up, e.g. 0.98112 -> "98.11%".
[[nodiscard]] std::string percent(double ratio, int decimals = 2);

/// Per-class table: one row per metric, one column per class plus
/// macro_avg. Values are raw ratios; `*_undefined` rows flag zero
/// denominators.
void write_metrics_csv(std::ostream &out, const metrics::MetricReport &report);

/// Aligned text block with rounded percentages.
void write_metrics_text(std::ostream &out, const metrics::MetricReport &report);

/// Header row `predicted\actual,<classes>` then one row per predicted class.
void write_confusion_csv(std::ostream &out, const metrics::ConfusionMatrix &cm);

/// Inverse of write_confusion_csv. Throws ParseError.
metrics::ConfusionMatrix read_confusion_csv(const std::filesystem::path &path);

/// Standalone SVG heatmap of the confusion matrix (rows predicted,
/// columns actual). Output depends only on the counts and names.
void write_confusion_svg(std::ostream &out, const metrics::ConfusionMatrix &cm, const std::string &title = "Confusion matrix");

}  // namespace dixkit::report
