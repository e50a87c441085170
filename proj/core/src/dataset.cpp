#include "dixkit/dataset.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"
#include "dixkit/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace dixkit::dataset {

namespace fs = std::filesystem;

std::vector<std::size_t> DatasetManifest::class_counts() const {
    std::vector<std::size_t> counts(classes.size(), 0);
    for (const Record &r : records) {
        if (r.label < counts.size()) {
            ++counts[r.label];
        }
    }
    return counts;
}

std::size_t DatasetManifest::class_index(const std::string &name) const {
    for (const ClassLabel &c : classes) {
        if (c.name == name) {
            return c.index;
        }
    }
    throw DataError(fmt::format("unknown label '{}'", name));
}

void validate(const DatasetManifest &manifest) {
    if (manifest.classes.empty()) {
        throw DataError("manifest has no classes");
    }
    std::unordered_set<std::string> names;
    for (std::size_t i = 0; i < manifest.classes.size(); ++i) {
        const ClassLabel &c = manifest.classes[i];
        if (c.index != i) {
            throw DataError(fmt::format("class '{}' has index {}, expected {}", c.name, c.index, i));
        }
        if (c.name.empty()) {
            throw DataError(fmt::format("class {} has an empty name", i));
        }
        if (!names.insert(c.name).second) {
            throw DataError(fmt::format("duplicate class name '{}'", c.name));
        }
    }
    std::unordered_set<std::string> paths;
    for (const Record &r : manifest.records) {
        if (r.label >= manifest.classes.size()) {
            throw DataError(fmt::format("record '{}' has invalid label {}", r.image_path, r.label));
        }
        if (!paths.insert(r.image_path).second) {
            throw DataError(fmt::format("duplicate image path '{}'", r.image_path));
        }
    }
    const auto counts = manifest.class_counts();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) {
            throw DataError(fmt::format("class '{}' is empty", manifest.classes[i].name));
        }
    }
}

DatasetManifest make_manifest(std::vector<std::string> class_names, std::vector<Record> records, std::uint64_t seed) {
    DatasetManifest manifest;
    manifest.seed = seed;
    for (std::size_t i = 0; i < class_names.size(); ++i) {
        manifest.classes.push_back({ i, std::move(class_names[i]) });
    }
    manifest.records = std::move(records);
    validate(manifest);
    return manifest;
}

namespace {

bool is_image_file(const fs::path &p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".jpg" || ext == ".jpeg" || ext == ".png";
}

DatasetManifest load_directory(const fs::path &root, std::uint64_t seed) {
    std::vector<fs::path> class_dirs;
    std::error_code ec;
    for (const auto &entry : fs::directory_iterator(root, ec)) {
        if (entry.is_directory()) {
            class_dirs.push_back(entry.path());
        }
    }
    if (ec) {
        throw DataError(fmt::format("cannot read directory '{}': {}", root.string(), ec.message()));
    }
    std::sort(class_dirs.begin(), class_dirs.end(), [](const fs::path &a, const fs::path &b) {
        return a.filename().string() < b.filename().string();
    });

    DatasetManifest manifest;
    manifest.seed = seed;
    for (const fs::path &dir : class_dirs) {
        const std::size_t label = manifest.classes.size();
        manifest.classes.push_back({ label, dir.filename().string() });
        std::vector<fs::path> files;
        for (const auto &entry : fs::directory_iterator(dir, ec)) {
            if (entry.is_regular_file() && is_image_file(entry.path())) {
                files.push_back(entry.path());
            }
        }
        if (ec) {
            throw DataError(fmt::format("cannot read directory '{}': {}", dir.string(), ec.message()));
        }
        std::sort(files.begin(), files.end());
        for (const fs::path &f : files) {
            manifest.records.push_back({ f.generic_string(), label });
        }
    }
    validate(manifest);
    return manifest;
}

std::vector<std::string> split_class_list(const std::string &value) {
    std::vector<std::string> names;
    for (auto &field : csv::split_line(value)) {
        names.push_back(std::move(field));
    }
    return names;
}

DatasetManifest load_file(const fs::path &path, std::uint64_t seed) {
    const std::string source = path.string();
    const auto lines = csv::read_lines(path);

    DatasetManifest manifest;
    manifest.seed = seed;
    bool fixed_classes = false;
    bool header_seen = false;
    std::unordered_map<std::string, std::size_t> index_of;

    for (const auto &[number, text] : lines) {
        if (csv::trim(text).empty()) {
            continue;
        }
        std::string key;
        std::string value;
        if (text.front() == '#') {
            if (csv::parse_metadata(text, key, value) && key == "classes") {
                if (header_seen) {
                    throw ParseError(source, number, "'# classes=' must precede the header");
                }
                for (auto &name : split_class_list(value)) {
                    if (!index_of.emplace(name, manifest.classes.size()).second) {
                        throw ParseError(source, number, fmt::format("duplicate class name '{}'", name));
                    }
                    manifest.classes.push_back({ manifest.classes.size(), std::move(name) });
                }
                fixed_classes = true;
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
            if (fields.size() != 2 || fields[0] != "path" || fields[1] != "label") {
                throw ParseError(source, number, "expected header 'path,label'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(source, number, "expected 'path,label'");
        }
        auto it = index_of.find(fields[1]);
        if (it == index_of.end()) {
            if (fixed_classes) {
                throw ParseError(source, number, fmt::format("unknown label '{}'", fields[1]));
            }
            it = index_of.emplace(fields[1], manifest.classes.size()).first;
            manifest.classes.push_back({ it->second, fields[1] });
        }
        manifest.records.push_back({ std::move(fields[0]), it->second });
    }
    if (!header_seen) {
        throw ParseError(source, lines.empty() ? 1 : lines.back().number, "missing header 'path,label'");
    }
    try {
        validate(manifest);
    } catch (const DataError &e) {
        throw DataError(source + ": " + e.what());
    }
    return manifest;
}

}  // namespace

DatasetManifest load_manifest(const fs::path &path, std::uint64_t seed) {
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        throw DataError(fmt::format("path '{}' does not exist", path.string()));
    }
    if (fs::is_directory(path, ec)) {
        return load_directory(path, seed);
    }
    return load_file(path, seed);
}

const char *to_string(Split split) noexcept {
    switch (split) {
        case Split::train: return "train";
        case Split::validation: return "validation";
        case Split::test: return "test";
    }
    return "?";
}

Split parse_split(const std::string &name) {
    if (name == "train") return Split::train;
    if (name == "validation") return Split::validation;
    if (name == "test") return Split::test;
    throw DataError(fmt::format("unknown split '{}'", name));
}

std::vector<Split> SplitAssignment::per_record(std::size_t record_count) const {
    std::vector<Split> out(record_count, Split::test);
    for (std::size_t i : train) out.at(i) = Split::train;
    for (std::size_t i : validation) out.at(i) = Split::validation;
    return out;
}

std::size_t floor_count(double fraction, std::size_t n) noexcept {
    const double x = fraction * static_cast<double>(n);
    const double nearest = std::round(x);
    double result = std::floor(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        result = nearest;
    }
    if (result <= 0.0) {
        return 0;
    }
    return std::min(n, static_cast<std::size_t>(result));
}

SplitAssignment stratified_split(const DatasetManifest &manifest, double train_frac, double val_frac) {
    if (!(train_frac > 0.0) || !(val_frac >= 0.0) || !(train_frac + val_frac <= 1.0 + 1e-12)) {
        throw InvalidArgument(fmt::format(
            "split fractions must satisfy 0 < train, 0 <= validation, train + validation <= 1 (got {}, {})", train_frac, val_frac));
    }
    validate(manifest);

    std::vector<std::vector<std::size_t>> by_class(manifest.classes.size());
    for (std::size_t i = 0; i < manifest.records.size(); ++i) {
        by_class[manifest.records[i].label].push_back(i);
    }

    SplitAssignment out;
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        auto &members = by_class[c];
        CounterRng rng(mix_seed(manifest.seed, c));
        shuffle(std::span<std::size_t>(members), rng);

        const std::size_t n = members.size();
        const std::size_t n_train = floor_count(train_frac, n);
        const std::size_t n_val = std::min(n - n_train, floor_count(val_frac, n));
        out.train.insert(out.train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(n_train));
        out.validation.insert(out.validation.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train),
                              members.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
        out.test.insert(out.test.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), members.end());

        if (n_train == 0 || (val_frac > 0.0 && n_val == 0)) {
            out.warnings.push_back(fmt::format("class '{}' has {} record(s): train {}, validation {}, test {}",
                                               manifest.classes[c].name, n, n_train, n_val, n - n_train - n_val));
        }
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.validation.begin(), out.validation.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

std::vector<SplitCounts> summarize(const DatasetManifest &manifest, const SplitAssignment &split) {
    std::vector<SplitCounts> counts(manifest.classes.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        counts[c].class_name = manifest.classes[c].name;
    }
    for (std::size_t i : split.train) ++counts[manifest.records.at(i).label].train;
    for (std::size_t i : split.validation) ++counts[manifest.records.at(i).label].validation;
    for (std::size_t i : split.test) ++counts[manifest.records.at(i).label].test;
    for (auto &c : counts) {
        c.total = c.train + c.validation + c.test;
    }
    return counts;
}

void write_split(std::ostream &out, const DatasetManifest &manifest, const SplitAssignment &split) {
    std::vector<std::string> names;
    for (const auto &c : manifest.classes) {
        names.push_back(c.name);
    }
    out << "# classes=" << csv::join(names) << '\n';
    out << "path,label,split\n";
    const auto assignment = split.per_record(manifest.records.size());
    for (std::size_t i = 0; i < manifest.records.size(); ++i) {
        const Record &r = manifest.records[i];
        out << csv::join({ r.image_path, manifest.classes[r.label].name, to_string(assignment[i]) }) << '\n';
    }
}

void write_summary(std::ostream &out, const std::vector<SplitCounts> &counts) {
    out << "class,total,train,validation,test\n";
    SplitCounts total{ "Total" };
    for (const auto &c : counts) {
        out << csv::join({ c.class_name, std::to_string(c.total), std::to_string(c.train), std::to_string(c.validation),
                           std::to_string(c.test) })
            << '\n';
        total.total += c.total;
        total.train += c.train;
        total.validation += c.validation;
        total.test += c.test;
    }
    out << fmt::format("Total,{},{},{},{}\n", total.total, total.train, total.validation, total.test);
}

LoadedSplit read_split(const fs::path &path) {
    const std::string source = path.string();
    const auto lines = csv::read_lines(path);
    LoadedSplit loaded;
    std::unordered_map<std::string, std::size_t> index_of;
    bool fixed_classes = false;
    bool header_seen = false;

    for (const auto &[number, text] : lines) {
        if (csv::trim(text).empty()) {
            continue;
        }
        std::string key;
        std::string value;
        if (text.front() == '#') {
            if (csv::parse_metadata(text, key, value) && key == "classes") {
                for (auto &name : split_class_list(value)) {
                    index_of.emplace(name, loaded.manifest.classes.size());
                    loaded.manifest.classes.push_back({ loaded.manifest.classes.size(), std::move(name) });
                }
                fixed_classes = true;
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
            if (fields != std::vector<std::string>{ "path", "label", "split" }) {
                throw ParseError(source, number, "expected header 'path,label,split'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError(source, number, "expected 'path,label,split'");
        }
        auto it = index_of.find(fields[1]);
        if (it == index_of.end()) {
            if (fixed_classes) {
                throw ParseError(source, number, fmt::format("unknown label '{}'", fields[1]));
            }
            it = index_of.emplace(fields[1], loaded.manifest.classes.size()).first;
            loaded.manifest.classes.push_back({ it->second, fields[1] });
        }
        const std::size_t index = loaded.manifest.records.size();
        loaded.manifest.records.push_back({ fields[0], it->second });
        Split s{};
        try {
            s = parse_split(fields[2]);
        } catch (const DataError &e) {
            throw ParseError(source, number, e.what());
        }
        switch (s) {
            case Split::train: loaded.split.train.push_back(index); break;
            case Split::validation: loaded.split.validation.push_back(index); break;
            case Split::test: loaded.split.test.push_back(index); break;
        }
    }
    if (!header_seen) {
        throw ParseError(source, 1, "missing header 'path,label,split'");
    }
    validate(loaded.manifest);
    return loaded;
}

}  // namespace dixkit::dataset
