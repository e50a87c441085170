#include "dixkit/toy_data.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"
#include "dixkit/rng.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace dixkit::toy {

FeatureTable make_moons(std::size_t per_class, double noise, std::uint64_t seed) {
    if (per_class == 0) {
        throw InvalidArgument("make_moons needs at least one sample per class");
    }
    constexpr std::size_t kClasses = 4;
    constexpr std::size_t kDims = 2;
    CounterRng rng(seed);
    FeatureTable table;
    table.class_names = { "upper-left", "lower-left", "upper-right", "lower-right" };
    std::vector<double> values;
    for (std::size_t i = 0; i < per_class * kClasses; ++i) {
        const std::size_t label = i % kClasses;
        const double t = std::numbers::pi * rng.uniform();
        const bool upper = label % 2 == 0;
        const double shift = label < 2 ? 0.0 : 3.5;
        double x = upper ? std::cos(t) : 1.0 - std::cos(t);
        double y = upper ? std::sin(t) : -0.1 - std::sin(t);
        x += shift + noise * rng.normal();
        y += noise * rng.normal();
        values.push_back(x);
        values.push_back(y);
        table.data.labels.push_back(label);
        table.data.sample_ids.push_back(fmt::format("toy-{:05}", i));
    }
    const std::size_t n = table.data.labels.size();
    for (std::size_t d = 0; d < kDims; ++d) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) mean += values[r * kDims + d];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t r = 0; r < n; ++r) var += (values[r * kDims + d] - mean) * (values[r * kDims + d] - mean);
        const double sd = std::sqrt(var / static_cast<double>(n));
        for (std::size_t r = 0; r < n; ++r) {
            values[r * kDims + d] = sd > 0.0 ? (values[r * kDims + d] - mean) / sd : 0.0;
        }
    }
    table.data.features = Matrix(n, kDims, std::move(values));
    return table;
}

void write_features(std::ostream &out, const FeatureTable &table) {
    out << "# classes=" << csv::join(table.class_names) << '\n';
    out << "sample_id,label";
    for (std::size_t d = 0; d < table.data.features.cols(); ++d) {
        out << ",x" << d + 1;
    }
    out << '\n';
    for (std::size_t r = 0; r < table.data.size(); ++r) {
        out << csv::escape(table.data.sample_ids[r]) << ',' << csv::escape(table.class_names[table.data.labels[r]]);
        for (double v : table.data.features.row(r)) {
            out << fmt::format(",{}", v);
        }
        out << '\n';
    }
}

FeatureTable read_features(std::istream &in, const std::string &source) {
    FeatureTable table;
    std::unordered_map<std::string, std::size_t> index_of;
    std::unordered_set<std::string> ids;
    bool fixed_classes = false;
    bool header_seen = false;
    std::size_t dims = 0;
    std::vector<double> values;

    for (const auto &[number, text] : csv::read_lines(in)) {
        if (csv::trim(text).empty()) {
            continue;
        }
        std::vector<std::string> fields;
        try {
            if (text.front() == '#') {
                std::string key;
                std::string value;
                if (csv::parse_metadata(text, key, value) && key == "classes") {
                    for (auto &name : csv::split_line(value)) {
                        index_of.emplace(name, table.class_names.size());
                        table.class_names.push_back(std::move(name));
                    }
                    fixed_classes = true;
                }
                continue;
            }
            fields = csv::split_line(text);
        } catch (const std::invalid_argument &e) {
            throw ParseError(source, number, e.what());
        }
        if (!header_seen) {
            if (fields.size() < 3 || fields[0] != "sample_id" || fields[1] != "label") {
                throw ParseError(source, number, "expected header 'sample_id,label,<features...>'");
            }
            dims = fields.size() - 2;
            header_seen = true;
            continue;
        }
        if (fields.size() != dims + 2) {
            throw ParseError(source, number, fmt::format("expected {} columns, found {}", dims + 2, fields.size()));
        }
        if (!ids.insert(fields[0]).second) {
            throw ParseError(source, number, fmt::format("duplicate sample_id '{}'", fields[0]));
        }
        auto it = index_of.find(fields[1]);
        if (it == index_of.end()) {
            if (fixed_classes) {
                throw ParseError(source, number, fmt::format("unknown label '{}'", fields[1]));
            }
            it = index_of.emplace(fields[1], table.class_names.size()).first;
            table.class_names.push_back(fields[1]);
        }
        for (std::size_t d = 0; d < dims; ++d) {
            double v = 0.0;
            if (!csv::parse_double(fields[d + 2], v) || !std::isfinite(v)) {
                throw ParseError(source, number, fmt::format("non-numeric feature '{}'", fields[d + 2]));
            }
            values.push_back(v);
        }
        table.data.sample_ids.push_back(fields[0]);
        table.data.labels.push_back(it->second);
    }
    if (!header_seen || table.data.labels.empty()) {
        throw ParseError(source, 1, "feature file has no data rows");
    }
    table.data.features = Matrix(table.data.labels.size(), dims, std::move(values));
    return table;
}

FeatureTable read_features(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError(fmt::format("cannot open feature file '{}'", path.string()));
    }
    return read_features(in, path.string());
}

}  // namespace dixkit::toy
