#include "dixkit/metrics.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <numeric>

namespace dixkit::metrics {

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_names)
    : names_(std::move(class_names)), counts_(names_.size() * names_.size(), 0) {
    if (names_.empty()) {
        throw InvalidArgument("confusion matrix needs at least one class");
    }
}

ConfusionMatrix ConfusionMatrix::from_counts(std::vector<std::string> class_names,
                                             const std::vector<std::vector<std::uint64_t>> &counts) {
    ConfusionMatrix cm(std::move(class_names));
    if (counts.size() != cm.classes()) {
        throw InvalidArgument(fmt::format("expected {} rows of counts, got {}", cm.classes(), counts.size()));
    }
    for (std::size_t p = 0; p < counts.size(); ++p) {
        if (counts[p].size() != cm.classes()) {
            throw InvalidArgument(fmt::format("row {} has {} counts, expected {}", p, counts[p].size(), cm.classes()));
        }
        for (std::size_t a = 0; a < counts[p].size(); ++a) {
            cm.counts_[p * cm.classes() + a] = counts[p][a];
        }
    }
    return cm;
}

void ConfusionMatrix::add(std::size_t actual, std::size_t predicted, std::uint64_t n) {
    if (actual >= classes() || predicted >= classes()) {
        throw InvalidArgument(fmt::format("label out of range: actual {}, predicted {}, classes {}", actual, predicted,
                                          classes()));
    }
    counts_[predicted * classes() + actual] += n;
}

std::uint64_t ConfusionMatrix::predicted_total(std::size_t c) const noexcept {
    std::uint64_t sum = 0;
    for (std::size_t a = 0; a < classes(); ++a) {
        sum += count(c, a);
    }
    return sum;
}

std::uint64_t ConfusionMatrix::support(std::size_t c) const noexcept {
    std::uint64_t sum = 0;
    for (std::size_t p = 0; p < classes(); ++p) {
        sum += count(p, c);
    }
    return sum;
}

std::uint64_t ConfusionMatrix::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{ 0 });
}

std::uint64_t ConfusionMatrix::trace() const noexcept {
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < classes(); ++c) {
        sum += count(c, c);
    }
    return sum;
}

ConfusionMatrix build_confusion(std::span<const std::size_t> actual, std::span<const std::size_t> predicted,
                                std::vector<std::string> class_names) {
    if (actual.size() != predicted.size()) {
        throw InvalidArgument(fmt::format("label lists differ in length: {} actual vs {} predicted", actual.size(),
                                          predicted.size()));
    }
    if (actual.empty()) {
        throw InvalidArgument("no labels to evaluate");
    }
    ConfusionMatrix cm(std::move(class_names));
    for (std::size_t i = 0; i < actual.size(); ++i) {
        cm.add(actual[i], predicted[i]);
    }
    return cm;
}

double accuracy(const ConfusionMatrix &cm) {
    const std::uint64_t total = cm.total();
    if (total == 0) {
        throw DataError("accuracy of an empty confusion matrix");
    }
    return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

namespace {
Rate ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        return { 0.0, false };
    }
    return { static_cast<double>(num) / static_cast<double>(den), true };
}
}  // namespace

std::vector<Rate> precision_per_class(const ConfusionMatrix &cm) {
    std::vector<Rate> out;
    for (std::size_t c = 0; c < cm.classes(); ++c) {
        out.push_back(ratio(cm.true_positives(c), cm.predicted_total(c)));
    }
    return out;
}

std::vector<Rate> recall_per_class(const ConfusionMatrix &cm) {
    std::vector<Rate> out;
    for (std::size_t c = 0; c < cm.classes(); ++c) {
        out.push_back(ratio(cm.true_positives(c), cm.support(c)));
    }
    return out;
}

std::vector<Rate> f1_per_class(const ConfusionMatrix &cm) {
    const auto precision = precision_per_class(cm);
    const auto recall = recall_per_class(cm);
    std::vector<Rate> out;
    for (std::size_t c = 0; c < cm.classes(); ++c) {
        const double p = precision[c].value;
        const double r = recall[c].value;
        if (!precision[c].defined || !recall[c].defined || p + r == 0.0) {
            out.push_back({ 0.0, false });
        } else {
            out.push_back({ 2.0 * p * r / (p + r), true });
        }
    }
    return out;
}

MetricReport report_from_confusion(const ConfusionMatrix &cm) {
    MetricReport report;
    report.total = cm.total();
    report.correct = cm.trace();
    report.accuracy = accuracy(cm);
    const auto precision = precision_per_class(cm);
    const auto recall = recall_per_class(cm);
    const auto f1 = f1_per_class(cm);
    for (std::size_t c = 0; c < cm.classes(); ++c) {
        report.per_class.push_back({ cm.class_names()[c], precision[c], recall[c], f1[c], cm.support(c) });
        report.macro_precision += precision[c].value;
        report.macro_recall += recall[c].value;
        report.macro_f1 += f1[c].value;
    }
    const auto m = static_cast<double>(cm.classes());
    report.macro_precision /= m;
    report.macro_recall /= m;
    report.macro_f1 /= m;
    return report;
}

MetricReport full_report(std::span<const std::size_t> actual, std::span<const std::size_t> predicted,
                         std::vector<std::string> class_names) {
    return report_from_confusion(build_confusion(actual, predicted, std::move(class_names)));
}

}  // namespace dixkit::metrics
