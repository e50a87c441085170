#include "dixkit/probability.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <ostream>
#include <unordered_set>

namespace dixkit::predict {

namespace {

void check_unique(const std::vector<std::string> &names, const char *what) {
    std::unordered_set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw DataError(fmt::format("empty {}", what));
        }
        if (!seen.insert(n).second) {
            throw DataError(fmt::format("duplicate {} '{}'", what, n));
        }
    }
}

double row_sum(std::span<const double> row) {
    double sum = 0.0;
    for (double v : row) {
        sum += v;
    }
    return sum;
}

}  // namespace

void validate(const ProbabilityMatrix &pm) {
    if (pm.classes() < 2) {
        throw DataError(fmt::format("model '{}': need at least 2 classes (got {})", pm.model_name, pm.classes()));
    }
    if (pm.samples() < 1) {
        throw DataError(fmt::format("model '{}': no samples", pm.model_name));
    }
    if (pm.class_names.size() != pm.classes() || pm.sample_ids.size() != pm.samples()) {
        throw DataError(fmt::format("model '{}': names do not match the matrix shape", pm.model_name));
    }
    check_unique(pm.class_names, "class name");
    check_unique(pm.sample_ids, "sample id");
    for (std::size_t r = 0; r < pm.samples(); ++r) {
        for (double v : pm.rows.row(r)) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw DataError(fmt::format("model '{}', sample '{}': probability {} outside [0, 1]", pm.model_name,
                                            pm.sample_ids[r], v));
            }
        }
        const double sum = row_sum(pm.rows.row(r));
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw DataError(fmt::format("model '{}', sample '{}': row sums to {}", pm.model_name, pm.sample_ids[r], sum));
        }
    }
}

ProbabilityMatrix parse_probability_text(std::istream &in, const std::string &source,
                                         const std::string &default_model_name, ParseOptions options) {
    ProbabilityMatrix pm;
    std::vector<std::string> declared_classes;
    bool header_seen = false;
    std::vector<double> values;
    std::unordered_set<std::string> ids;

    for (const auto &[number, text] : csv::read_lines(in)) {
        if (csv::trim(text).empty()) {
            continue;
        }
        if (text.front() == '#') {
            std::string key;
            std::string value;
            if (csv::parse_metadata(text, key, value)) {
                if (key == "model") {
                    pm.model_name = value;
                } else if (key == "classes") {
                    try {
                        declared_classes = csv::split_line(value);
                    } catch (const std::invalid_argument &e) {
                        throw ParseError(source, number, e.what());
                    }
                }
            }
            continue;
        }
        std::vector<std::string> fields;
        try {
            fields = csv::split_line(text);
        } catch (const std::invalid_argument &e) {
            throw ParseError(source, number, e.what());
        }

        if (!header_seen) {
            if (fields.size() < 3 || fields[0] != "sample_id") {
                throw ParseError(source, number, "malformed header: expected 'sample_id,<class1>,<class2>,...'");
            }
            pm.class_names.assign(fields.begin() + 1, fields.end());
            try {
                check_unique(pm.class_names, "class name");
            } catch (const DataError &e) {
                throw ParseError(source, number, fmt::format("malformed header: {}", e.what()));
            }
            if (!declared_classes.empty() && declared_classes != pm.class_names) {
                throw ParseError(source, number, "header classes differ from '# classes=' metadata");
            }
            header_seen = true;
            continue;
        }

        const std::size_t m = pm.class_names.size();
        if (fields.size() != m + 1) {
            throw ParseError(source, number, fmt::format("expected {} columns, found {}", m + 1, fields.size()));
        }
        if (fields[0].empty()) {
            throw ParseError(source, number, "empty sample_id");
        }
        if (!ids.insert(fields[0]).second) {
            throw ParseError(source, number, fmt::format("duplicate sample_id '{}'", fields[0]));
        }
        std::vector<double> row(m);
        for (std::size_t c = 0; c < m; ++c) {
            if (!csv::parse_double(fields[c + 1], row[c]) || !std::isfinite(row[c])) {
                throw ParseError(source, number, fmt::format("non-numeric value '{}' for class '{}'", fields[c + 1],
                                                             pm.class_names[c]));
            }
            if (!(row[c] >= 0.0 && row[c] <= 1.0)) {
                throw ParseError(source, number, fmt::format("probability {} outside [0, 1]", row[c]));
            }
        }
        const double sum = row_sum(row);
        const double error = std::abs(sum - 1.0);
        if (error > kRowSumTolerance) {
            if (options.renormalize && error <= kRenormalizeTolerance) {
                for (double &v : row) {
                    v /= sum;
                }
            } else {
                throw ParseError(source, number,
                                 fmt::format("row sums to {} (tolerance {}{})", sum, kRowSumTolerance,
                                             options.renormalize ? "" : "; renormalization disabled"));
            }
        }
        pm.sample_ids.push_back(fields[0]);
        values.insert(values.end(), row.begin(), row.end());
    }
    if (!header_seen) {
        throw ParseError(source, 1, "missing header");
    }
    if (pm.sample_ids.empty()) {
        throw ParseError(source, 1, "no sample rows");
    }
    if (pm.model_name.empty()) {
        pm.model_name = default_model_name;
    }
    pm.rows = Matrix(pm.sample_ids.size(), pm.class_names.size(), std::move(values));
    validate(pm);
    return pm;
}

ProbabilityMatrix parse_probability_file(const std::filesystem::path &path, ParseOptions options) {
    std::ifstream in(path);
    if (!in) {
        throw DataError(fmt::format("cannot open probability file '{}'", path.string()));
    }
    return parse_probability_text(in, path.string(), path.stem().string(), options);
}

void write_probability(std::ostream &out, const ProbabilityMatrix &pm) {
    out << "# model=" << pm.model_name << '\n';
    std::vector<std::string> header{ "sample_id" };
    header.insert(header.end(), pm.class_names.begin(), pm.class_names.end());
    out << csv::join(header) << '\n';
    for (std::size_t r = 0; r < pm.samples(); ++r) {
        out << csv::escape(pm.sample_ids[r]);
        for (double v : pm.rows.row(r)) {
            out << ',' << fmt::format("{}", v);
        }
        out << '\n';
    }
}

ModelBundle assemble_bundle(std::vector<ProbabilityMatrix> matrices) {
    if (matrices.empty()) {
        throw DataError("cannot assemble an empty model bundle");
    }
    const ProbabilityMatrix &first = matrices.front();
    for (const ProbabilityMatrix &pm : matrices) {
        validate(pm);
        if (pm.class_names != first.class_names) {
            throw DataError(fmt::format("class mismatch: model '{}' has classes [{}] but model '{}' has [{}]",
                                        pm.model_name, csv::join(pm.class_names), first.model_name,
                                        csv::join(first.class_names)));
        }
        if (pm.sample_ids != first.sample_ids) {
            throw DataError(fmt::format("sample mismatch: model '{}' and model '{}' list different sample ids",
                                        pm.model_name, first.model_name));
        }
    }
    ModelBundle bundle;
    bundle.models_ = std::move(matrices);
    return bundle;
}

}  // namespace dixkit::predict
