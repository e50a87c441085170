#include "oracles.hpp"

#include "dixkit/dataset.hpp"
#include "dixkit/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace dixkit;
using dataset::Record;

namespace {

dataset::DatasetManifest sized_manifest(const std::vector<std::size_t> &sizes, std::uint64_t seed = 0) {
    std::vector<std::string> names;
    std::vector<Record> records;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        names.push_back("class" + std::to_string(c));
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            records.push_back({ "c" + std::to_string(c) + "/img" + std::to_string(i) + ".jpg", c });
        }
    }
    return dataset::make_manifest(names, records, seed);
}

std::vector<std::size_t> label_counts(const dataset::DatasetManifest &m, const std::vector<std::size_t> &idx) {
    std::vector<std::size_t> out(m.classes.size(), 0);
    for (std::size_t i : idx) ++out[m.records[i].label];
    return out;
}

}  // namespace

TEST_SUITE("dataset") {
    TEST_CASE("blood smear class sizes split 0.7/0.2") {
        const auto m = sized_manifest({ 505, 796, 955, 979 }, 17);
        const auto split = dataset::stratified_split(m, 0.7, 0.2);
        CHECK(label_counts(m, split.train) == std::vector<std::size_t>{ 353, 557, 668, 685 });
        CHECK(label_counts(m, split.validation) == std::vector<std::size_t>{ 101, 159, 191, 195 });
        CHECK(label_counts(m, split.test) == std::vector<std::size_t>{ 51, 80, 96, 99 });
        CHECK(split.train.size() == 2263);
        CHECK(split.validation.size() == 646);
        CHECK(split.test.size() == 326);
        CHECK(split.warnings.empty());
    }

    TEST_CASE("floor_count equals the exact rational floor for every N up to 10000") {
        // Fractions that are exact percentages: floor(p * N / 100) in integers.
        for (int percent : { 1, 5, 10, 15, 20, 25, 30, 33, 35, 60, 65, 70, 80, 85, 90, 95, 99, 100 }) {
            const double fraction = percent / 100.0;
            for (std::size_t n = 1; n <= 10000; ++n) {
                const std::size_t expect = static_cast<std::size_t>(percent) * n / 100;
                REQUIRE_MESSAGE(dataset::floor_count(fraction, n) == expect, "fraction ", fraction, " n ", n);
            }
        }
        CHECK(dataset::floor_count(0.0, 10) == 0);
        CHECK(dataset::floor_count(1.0, 10) == 10);
    }

    TEST_CASE("split is a partition with sorted lists") {
        const auto m = sized_manifest({ 1, 2, 3, 7, 10, 31 }, 5);
        for (auto [tr, va] : { std::pair{ 0.7, 0.2 }, std::pair{ 0.5, 0.5 }, std::pair{ 1.0, 0.0 }, std::pair{ 0.1, 0.0 } }) {
            const auto s = dataset::stratified_split(m, tr, va);
            std::vector<std::size_t> all;
            for (const auto *list : { &s.train, &s.validation, &s.test }) {
                CHECK(std::is_sorted(list->begin(), list->end()));
                all.insert(all.end(), list->begin(), list->end());
            }
            std::sort(all.begin(), all.end());
            std::vector<std::size_t> expect(m.records.size());
            for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = i;
            CHECK(all == expect);
            // Per-class counts follow the floor rule.
            const auto counts = m.class_counts();
            const auto trc = label_counts(m, s.train);
            const auto vac = label_counts(m, s.validation);
            for (std::size_t c = 0; c < counts.size(); ++c) {
                CHECK(trc[c] == dataset::floor_count(tr, counts[c]));
                CHECK(vac[c] == std::min(counts[c] - trc[c], dataset::floor_count(va, counts[c])));
            }
        }
    }

    TEST_CASE("same seed reproduces, different seed reshuffles") {
        const auto a = dataset::stratified_split(sized_manifest({ 40, 60 }, 3), 0.7, 0.2);
        const auto b = dataset::stratified_split(sized_manifest({ 40, 60 }, 3), 0.7, 0.2);
        const auto c = dataset::stratified_split(sized_manifest({ 40, 60 }, 4), 0.7, 0.2);
        CHECK(a.train == b.train);
        CHECK(a.validation == b.validation);
        CHECK(a.test == b.test);
        CHECK(a.train != c.train);
    }

    TEST_CASE("adding a class leaves existing classes untouched") {
        const auto a = dataset::stratified_split(sized_manifest({ 30, 30 }, 9), 0.7, 0.2);
        const auto b = dataset::stratified_split(sized_manifest({ 30, 30, 12 }, 9), 0.7, 0.2);
        std::vector<std::size_t> b_prefix;
        std::copy_if(b.train.begin(), b.train.end(), std::back_inserter(b_prefix), [](std::size_t i) { return i < 60; });
        CHECK(a.train == b_prefix);
    }

    TEST_CASE("tiny classes produce warnings") {
        const auto s = dataset::stratified_split(sized_manifest({ 1, 50 }), 0.7, 0.2);
        REQUIRE(s.warnings.size() == 1);
        CHECK(s.warnings[0].find("class0") != std::string::npos);
        CHECK(s.test.size() == 1 + 50 - 35 - 10);
    }

    TEST_CASE("fraction domain") {
        const auto m = sized_manifest({ 10 });
        CHECK_THROWS_AS(dataset::stratified_split(m, 0.8, 0.3), InvalidArgument);
        CHECK_THROWS_AS(dataset::stratified_split(m, 0.0, 0.3), InvalidArgument);
        CHECK_THROWS_AS(dataset::stratified_split(m, 0.5, -0.1), InvalidArgument);
        CHECK_NOTHROW(dataset::stratified_split(m, 0.7, 0.3));
    }

    TEST_CASE("manifest validation") {
        CHECK_THROWS_AS(dataset::make_manifest({ "a", "b" }, { { "x.jpg", 0 } }), DataError);      // empty class
        CHECK_THROWS_AS(dataset::make_manifest({ "a" }, { { "x.jpg", 1 } }), DataError);           // label range
        CHECK_THROWS_AS(dataset::make_manifest({ "a" }, { { "x.jpg", 0 }, { "x.jpg", 0 } }), DataError);
        CHECK_THROWS_AS(dataset::make_manifest({ "a", "a" }, { { "x.jpg", 0 }, { "y.jpg", 1 } }), DataError);
        const auto m = dataset::make_manifest({ "a", "b" }, { { "x.jpg", 1 }, { "y.jpg", 0 } });
        CHECK(m.class_index("b") == 1);
        CHECK_THROWS_AS((void)m.class_index("zzz"), DataError);
    }

    TEST_CASE("load a manifest file") {
        testing::TempDir dir("manifest");
        testing::write_file(dir / "m.csv", "# classes=benign,pro-b\npath,label\na.jpg,pro-b\nb.jpg,benign\n\nc.jpg,pro-b\n");
        const auto m = dataset::load_manifest(dir / "m.csv", 12);
        REQUIRE(m.classes.size() == 2);
        CHECK(m.classes[0].name == "benign");
        CHECK(m.records.size() == 3);
        CHECK(m.records[0].label == 1);
        CHECK(m.seed == 12);

        testing::write_file(dir / "order.csv", "path,label\na.jpg,zeta\nb.jpg,alpha\n");
        const auto o = dataset::load_manifest(dir / "order.csv");
        CHECK(o.classes[0].name == "zeta");
    }

    TEST_CASE("manifest file errors carry line numbers") {
        testing::TempDir dir("manifest-bad");
        const auto expect_error = [&](const std::string &text, const std::string &needle) {
            testing::write_file(dir / "bad.csv", text);
            try {
                dataset::load_manifest(dir / "bad.csv");
                FAIL("expected an error for: " << text);
            } catch (const DataError &e) {
                CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
            }
        };
        expect_error("file,label\na.jpg,x\n", ":1:");
        expect_error("path,label\na.jpg\n", ":2:");
        expect_error("# classes=a\npath,label\nx.jpg,a\ny.jpg,b\n", ":4: unknown label 'b'");
        expect_error("path,label\n\"a.jpg,x\n", ":2:");
        expect_error("path,label\n", "no classes");
        CHECK_THROWS_AS(dataset::load_manifest(dir / "missing.csv"), DataError);
    }

    TEST_CASE("load a class-per-folder directory") {
        testing::TempDir dir("tree");
        for (const char *f : { "pro/b.PNG", "pro/a.jpg", "benign/z.jpeg", "benign/notes.txt", "benign/y.JPG" }) {
            testing::write_file(dir.path() / f, "x");
        }
        const auto m = dataset::load_manifest(dir.path());
        REQUIRE(m.classes.size() == 2);
        CHECK(m.classes[0].name == "benign");
        CHECK(m.classes[1].name == "pro");
        REQUIRE(m.records.size() == 4);
        CHECK(std::filesystem::path(m.records[0].image_path).filename() == "y.JPG");
        CHECK(std::filesystem::path(m.records[1].image_path).filename() == "z.jpeg");
        CHECK(std::filesystem::path(m.records[2].image_path).filename() == "a.jpg");
    }

    TEST_CASE("split file round trip and summary") {
        const auto m = sized_manifest({ 5, 8 }, 2);
        const auto s = dataset::stratified_split(m, 0.6, 0.2);
        testing::TempDir dir("splitfile");
        {
            std::ofstream out(dir / "split.csv");
            dataset::write_split(out, m, s);
        }
        const auto loaded = dataset::read_split(dir / "split.csv");
        CHECK(loaded.split.train == s.train);
        CHECK(loaded.split.validation == s.validation);
        CHECK(loaded.split.test == s.test);
        REQUIRE(loaded.manifest.records.size() == m.records.size());
        CHECK(loaded.manifest.records[7].image_path == m.records[7].image_path);

        std::ostringstream summary;
        dataset::write_summary(summary, dataset::summarize(m, s));
        CHECK(summary.str() == "class,total,train,validation,test\nclass0,5,3,1,1\nclass1,8,4,1,3\nTotal,13,7,2,4\n");
    }

    TEST_CASE("split names") {
        for (auto s : { dataset::Split::train, dataset::Split::validation, dataset::Split::test }) {
            CHECK(dataset::parse_split(dataset::to_string(s)) == s);
        }
        CHECK_THROWS_AS((void)dataset::parse_split("val"), DataError);
    }
}
