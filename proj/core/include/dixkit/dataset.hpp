#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dixkit::dataset {

struct ClassLabel {
    std::size_t index = 0;
    std::string name;
};

struct Record {
    std::string image_path;
    std::size_t label = 0;
};

/// Labeled image collection. Class indices are dense (classes[i].index == i)
/// and every class has at least one record.
struct DatasetManifest {
    std::vector<ClassLabel> classes;
    std::vector<Record> records;
    std::uint64_t seed = 0;

    [[nodiscard]] std::vector<std::size_t> class_counts() const;
    [[nodiscard]] std::size_t class_index(const std::string &name) const;  // throws DataError
};

/// Checks dense/unique classes, valid labels, unique paths and non-empty
/// classes. Throws DataError on the first violation.
void validate(const DatasetManifest &manifest);

/// Builds a manifest from class names and per-record labels (testing and
/// synthetic data helper). Validates.
DatasetManifest make_manifest(std::vector<std::string> class_names, std::vector<Record> records, std::uint64_t seed = 0);

/// Loads either
///  - a directory `<root>/<class>/<image>` (classes sorted by name, images
///    with .jpg/.jpeg/.png extension in any case, sorted by file name), or
///  - a manifest file with header `path,label`. An optional `# classes=a,b,c`
///    line fixes the class list; otherwise classes appear in first-use order.
DatasetManifest load_manifest(const std::filesystem::path &path, std::uint64_t seed = 0);

enum class Split { train, validation, test };

[[nodiscard]] const char *to_string(Split split) noexcept;
[[nodiscard]] Split parse_split(const std::string &name);  // throws DataError

/// Partition of record indices. Each list is sorted ascending.
struct SplitAssignment {
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
    std::vector<std::size_t> test;
    /// Human-readable notes, e.g. classes too small to reach train/validation.
    std::vector<std::string> warnings;

    [[nodiscard]] std::vector<Split> per_record(std::size_t record_count) const;
};

/// floor(fraction * n), robust to the representation error of decimal
/// fractions such as 0.7 (so 0.7 * 10 yields 7, never 6).
[[nodiscard]] std::size_t floor_count(double fraction, std::size_t n) noexcept;

/// Per-class stratified split. For each class c with N_c records, the
/// records are shuffled with a generator keyed by mix_seed(seed, c); the first
/// floor(train_frac * N_c) go to train, the next floor(val_frac * N_c) to
/// validation, the rest to test.
///
/// Requires 0 < train_frac, 0 <= val_frac, train_frac + val_frac <= 1.
SplitAssignment stratified_split(const DatasetManifest &manifest, double train_frac, double val_frac);

/// Per-class counts of one split, in class order.
struct SplitCounts {
    std::string class_name;
    std::size_t total = 0;
    std::size_t train = 0;
    std::size_t validation = 0;
    std::size_t test = 0;
};

[[nodiscard]] std::vector<SplitCounts> summarize(const DatasetManifest &manifest, const SplitAssignment &split);

/// `path,label,split` rows in record order, preceded by a `# classes=` line.
void write_split(std::ostream &out, const DatasetManifest &manifest, const SplitAssignment &split);

/// Per-class split summary: `class,total,train,validation,test` plus a Total row.
void write_summary(std::ostream &out, const std::vector<SplitCounts> &counts);

struct LoadedSplit {
    DatasetManifest manifest;
    SplitAssignment split;
};

LoadedSplit read_split(const std::filesystem::path &path);

}  // namespace dixkit::dataset
