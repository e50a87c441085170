#include "dixkit/report.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace dixkit::report {

std::string percent(double ratio, int decimals) {
    const double scale = std::pow(10.0, decimals);
    // the 1e-9 nudge keeps exact binary halves such as 0.98115 from rounding down
    const double rounded = std::floor(ratio * 100.0 * scale + 0.5 + 1e-9) / scale;
    return fmt::format("{:.{}f}%", rounded, decimals);
}

void write_metrics_csv(std::ostream &out, const metrics::MetricReport &report) {
    std::vector<std::string> header{ "metric" };
    for (const auto &c : report.per_class) {
        header.push_back(c.name);
    }
    header.emplace_back("macro_avg");
    out << csv::join(header) << '\n';

    const auto rate_row = [&](const char *name, auto member, double macro) {
        out << name;
        for (const auto &c : report.per_class) {
            out << ',' << fmt::format("{}", (c.*member).value);
        }
        out << ',' << fmt::format("{}", macro) << '\n';
    };
    const auto flag_row = [&](const char *name, auto member) {
        out << name;
        for (const auto &c : report.per_class) {
            out << ',' << ((c.*member).defined ? 0 : 1);
        }
        out << ",\n";
    };
    rate_row("precision", &metrics::ClassMetrics::precision, report.macro_precision);
    rate_row("recall", &metrics::ClassMetrics::recall, report.macro_recall);
    rate_row("f1-score", &metrics::ClassMetrics::f1, report.macro_f1);
    out << "support";
    for (const auto &c : report.per_class) {
        out << ',' << c.support;
    }
    out << ',' << report.total << '\n';
    flag_row("precision_undefined", &metrics::ClassMetrics::precision);
    flag_row("recall_undefined", &metrics::ClassMetrics::recall);
    flag_row("f1_undefined", &metrics::ClassMetrics::f1);
    out << fmt::format("accuracy,{}", report.accuracy) << std::string(report.per_class.size(), ',') << '\n';
}

void write_metrics_text(std::ostream &out, const metrics::MetricReport &report) {
    std::size_t width = 9;  // "macro avg"
    for (const auto &c : report.per_class) {
        width = std::max(width, c.name.size());
    }
    const auto cell = [](const metrics::Rate &r) { return r.defined ? percent(r.value) : std::string("n/a"); };
    out << fmt::format("{:<{}}  {:>10}  {:>10}  {:>10}  {:>9}\n", "", width, "precision", "recall", "f1-score", "support");
    for (const auto &c : report.per_class) {
        out << fmt::format("{:<{}}  {:>10}  {:>10}  {:>10}  {:>9}\n", c.name, width, cell(c.precision), cell(c.recall),
                           cell(c.f1), c.support);
    }
    out << '\n';
    out << fmt::format("{:<{}}  {:>10}  {:>10}  {:>10}  {:>9}\n", "macro avg", width, percent(report.macro_precision),
                       percent(report.macro_recall), percent(report.macro_f1), report.total);
    out << fmt::format("accuracy = {} ({}/{})\n", percent(report.accuracy), report.correct, report.total);
}

void write_confusion_csv(std::ostream &out, const metrics::ConfusionMatrix &cm) {
    std::vector<std::string> header{ "predicted\\actual" };
    header.insert(header.end(), cm.class_names().begin(), cm.class_names().end());
    out << csv::join(header) << '\n';
    for (std::size_t p = 0; p < cm.classes(); ++p) {
        out << csv::escape(cm.class_names()[p]);
        for (std::size_t a = 0; a < cm.classes(); ++a) {
            out << ',' << cm.count(p, a);
        }
        out << '\n';
    }
}

metrics::ConfusionMatrix read_confusion_csv(const std::filesystem::path &path) {
    const std::string source = path.string();
    std::vector<std::string> names;
    std::vector<std::vector<std::uint64_t>> counts;
    bool header_seen = false;
    for (const auto &[number, text] : csv::read_lines(path)) {
        if (csv::trim(text).empty() || text.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        try {
            fields = csv::split_line(text);
        } catch (const std::invalid_argument &e) {
            throw ParseError(source, number, e.what());
        }
        if (!header_seen) {
            if (fields.size() < 2) {
                throw ParseError(source, number, "expected header with class names");
            }
            names.assign(fields.begin() + 1, fields.end());
            header_seen = true;
            continue;
        }
        if (fields.size() != names.size() + 1) {
            throw ParseError(source, number, fmt::format("expected {} columns", names.size() + 1));
        }
        if (counts.size() >= names.size() || fields[0] != names[counts.size()]) {
            throw ParseError(source, number, fmt::format("unexpected row label '{}'", fields[0]));
        }
        std::vector<std::uint64_t> row;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            std::uint64_t v = 0;
            const auto &f = fields[i];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size()) {
                throw ParseError(source, number, fmt::format("invalid count '{}'", f));
            }
            row.push_back(v);
        }
        counts.push_back(std::move(row));
    }
    if (!header_seen || counts.size() != names.size()) {
        throw ParseError(source, 1, "confusion matrix must be square with a header row");
    }
    return metrics::ConfusionMatrix::from_counts(std::move(names), counts);
}

namespace {

std::string xml_escape(const std::string &s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

void write_confusion_svg(std::ostream &out, const metrics::ConfusionMatrix &cm, const std::string &title) {
    constexpr int cell = 90;
    constexpr int left = 190;
    constexpr int top = 110;
    const int n = static_cast<int>(cm.classes());
    const int width = left + n * cell + 30;
    const int height = top + n * cell + 60;

    // shade by fraction of the column (actual class) so rare classes stay readable
    out << fmt::format(R"svg(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif">)svg",
                       width, height, width, height)
        << '\n';
    out << fmt::format(R"svg(<rect width="{}" height="{}" fill="white"/>)svg", width, height) << '\n';
    out << fmt::format(R"svg(<text x="{}" y="28" font-size="18" text-anchor="middle">{}</text>)svg", width / 2, xml_escape(title))
        << '\n';
    out << fmt::format(R"svg(<text x="{}" y="60" font-size="13" text-anchor="middle">actual</text>)svg", left + n * cell / 2) << '\n';
    out << fmt::format(R"svg(<text x="20" y="{}" font-size="13" transform="rotate(-90 20 {})" text-anchor="middle">predicted</text>)svg",
                       top + n * cell / 2, top + n * cell / 2)
        << '\n';
    for (int a = 0; a < n; ++a) {
        out << fmt::format(R"svg(<text x="{}" y="{}" font-size="11" text-anchor="middle">{}</text>)svg", left + a * cell + cell / 2,
                           top - 12, xml_escape(cm.class_names()[static_cast<std::size_t>(a)]))
            << '\n';
    }
    for (int p = 0; p < n; ++p) {
        const auto pi = static_cast<std::size_t>(p);
        out << fmt::format(R"svg(<text x="{}" y="{}" font-size="11" text-anchor="end">{}</text>)svg", left - 10,
                           top + p * cell + cell / 2 + 4, xml_escape(cm.class_names()[pi]))
            << '\n';
        for (int a = 0; a < n; ++a) {
            const auto ai = static_cast<std::size_t>(a);
            const std::uint64_t support = cm.support(ai);
            const double frac = support == 0 ? 0.0 : static_cast<double>(cm.count(pi, ai)) / static_cast<double>(support);
            const int shade = static_cast<int>(std::lround(255.0 - 200.0 * frac));
            out << fmt::format(R"svg(<rect x="{}" y="{}" width="{}" height="{}" fill="rgb({},{},255)" stroke="#444"/>)svg",
                               left + a * cell, top + p * cell, cell, cell, shade, shade)
                << '\n';
            out << fmt::format(R"svg(<text x="{}" y="{}" font-size="14" text-anchor="middle" fill="{}">{}</text>)svg",
                               left + a * cell + cell / 2, top + p * cell + cell / 2 + 5, frac > 0.6 ? "white" : "black",
                               cm.count(pi, ai))
                << '\n';
        }
    }
    out << "</svg>\n";
}

}  // namespace dixkit::report
