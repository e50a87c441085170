#include "oracles.hpp"

#include "dixkit/error.hpp"
#include "dixkit/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace dixkit;
using namespace dixkit::metrics;

namespace {

const std::vector<std::string> two{ "a", "b" };

// Rounded percentages as printed in the reference table.
constexpr double kTablePrecision[] = { 100, 95, 100, 100 };
constexpr double kTableRecall[] = { 88, 100, 100, 100 };
constexpr double kTableF1[] = { 93, 97, 99, 100 };

}  // namespace

TEST_SUITE("metrics") {
    TEST_CASE("confusion orientation: rows predicted, columns actual") {
        const std::vector<std::size_t> a1{ 0, 1 }, p1{ 0, 1 };
        const auto id = build_confusion(a1, p1, two);
        CHECK(id.count(0, 0) == 1);
        CHECK(id.count(1, 1) == 1);
        CHECK(id.count(0, 1) == 0);
        const std::vector<std::size_t> a2{ 0, 0 }, p2{ 1, 1 };
        const auto off = build_confusion(a2, p2, two);
        CHECK(off.count(1, 0) == 2);
        CHECK(off.count(0, 0) == 0);
        CHECK(off.support(0) == 2);
        CHECK(off.predicted_total(1) == 2);
        CHECK(accuracy(off) == 0.0);
    }

    TEST_CASE("build_confusion input checks") {
        const std::vector<std::size_t> one{ 0 }, pair{ 0, 1 }, bad{ 2 }, none{};
        CHECK_THROWS_AS(build_confusion(one, pair, two), InvalidArgument);
        CHECK_THROWS_AS(build_confusion(none, none, two), InvalidArgument);
        CHECK_THROWS_AS(build_confusion(bad, one, two), InvalidArgument);
        CHECK_THROWS_AS(accuracy(ConfusionMatrix(two)), DataError);
        CHECK_THROWS_AS(ConfusionMatrix::from_counts(two, { { 1, 2 } }), InvalidArgument);
    }

    TEST_CASE("reference matrix reproduces the expected per-class figures") {
        const auto cm = ConfusionMatrix::from_counts(testing::reference_class_names(), testing::reference_confusion_counts());
        const auto rep = report_from_confusion(cm);
        const std::uint64_t support[] = { 1672, 3254, 3198, 2628 };
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(rep.per_class[c].support == support[c]);
            CHECK(std::abs(100.0 * rep.per_class[c].precision.value - kTablePrecision[c]) <= 1.5);
            CHECK(std::abs(100.0 * rep.per_class[c].recall.value - kTableRecall[c]) <= 1.5);
            CHECK(std::abs(100.0 * rep.per_class[c].f1.value - kTableF1[c]) <= 1.5);
        }
        CHECK(rep.correct == 10549);
        CHECK(rep.total == 10752);
        CHECK(std::abs(100.0 * rep.accuracy - 98.11) <= 0.01);
        CHECK(rep.accuracy == 10549.0 / 10752.0);

        // Hand ratios.
        CHECK(rep.per_class[0].precision.value == doctest::Approx(1479.0 / 1482.0).epsilon(1e-15));
        CHECK(rep.per_class[1].precision.value == doctest::Approx(3248.0 / 3411.0).epsilon(1e-15));
        CHECK(rep.per_class[0].recall.value == doctest::Approx(1479.0 / 1672.0).epsilon(1e-15));
        CHECK(rep.per_class[2].recall.value == 1.0);
        // F1 = 2 TP / (2 TP + FP + FN) = 2 TP / (row sum + column sum)
        CHECK(rep.per_class[0].f1.value == doctest::Approx(2.0 * 1479 / (1482 + 1672)).epsilon(1e-14));
        CHECK(rep.per_class[1].f1.value == doctest::Approx(2.0 * 3248 / (3411 + 3254)).epsilon(1e-14));
        CHECK(rep.per_class[1].f1.value == doctest::Approx(0.97464).epsilon(1e-5));
    }

    TEST_CASE("expanding the reference counts into labels gives the same report") {
        std::vector<std::size_t> actual, predicted;
        testing::expand_counts(testing::reference_confusion_counts(), actual, predicted);
        CHECK(actual.size() == 10752);
        const auto cm = build_confusion(actual, predicted, testing::reference_class_names());
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t a = 0; a < 4; ++a) CHECK(cm.count(p, a) == testing::reference_confusion_counts()[p][a]);
    }

    TEST_CASE("undefined rates") {
        // Class b is never predicted and never occurs; class c occurs but is never predicted.
        const std::vector<std::string> names{ "a", "b", "c" };
        const std::vector<std::size_t> actual{ 0, 2 }, predicted{ 0, 0 };
        const auto rep = full_report(actual, predicted, names);
        CHECK_FALSE(rep.per_class[1].precision.defined);
        CHECK_FALSE(rep.per_class[1].recall.defined);
        CHECK_FALSE(rep.per_class[1].f1.defined);
        CHECK(rep.per_class[1].precision.value == 0.0);
        CHECK_FALSE(rep.per_class[2].precision.defined);
        CHECK(rep.per_class[2].recall.defined);
        CHECK(rep.per_class[2].recall.value == 0.0);
        CHECK(rep.per_class[0].precision.value == 0.5);
        CHECK(rep.macro_precision == doctest::Approx(0.5 / 3.0));

        const std::vector<std::size_t> one{ 1 };
        const auto single = full_report(one, one, names);
        CHECK(single.accuracy == 1.0);
        CHECK(single.per_class[1].f1.value == 1.0);
        CHECK_FALSE(single.per_class[0].precision.defined);
        CHECK_FALSE(single.per_class[2].recall.defined);
    }

    TEST_CASE("f1 edge cases") {
        // Precision 1, recall 0 cannot occur with counts; precision defined 0 and recall 0 gives undefined F1.
        const std::vector<std::size_t> actual{ 0, 1 }, predicted{ 1, 0 };
        const auto rep = full_report(actual, predicted, two);
        CHECK(rep.per_class[0].precision.defined);
        CHECK(rep.per_class[0].recall.defined);
        CHECK_FALSE(rep.per_class[0].f1.defined);
        CHECK(rep.per_class[0].f1.value == 0.0);
        // Equal precision and recall: F1 equals both.
        const std::vector<std::size_t> a2{ 0, 0, 1, 1 }, p2{ 0, 1, 1, 0 };
        const auto eq = full_report(a2, p2, two);
        CHECK(eq.per_class[0].f1.value == doctest::Approx(0.5).epsilon(1e-15));
    }

    TEST_CASE("brute-force oracle on random instances") {
        std::mt19937_64 gen(31);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t m = 2 + gen() % 5;
            const std::size_t n = 1 + gen() % 50;
            std::vector<std::size_t> actual(n), predicted(n);
            for (std::size_t i = 0; i < n; ++i) {
                actual[i] = gen() % m;
                predicted[i] = gen() % 3 == 0 ? actual[i] : gen() % m;
            }
            std::vector<std::string> names;
            for (std::size_t c = 0; c < m; ++c) names.push_back("k" + std::to_string(c));
            const auto rep = full_report(actual, predicted, names);
            const auto oracle = testing::oracle_rates(actual, predicted, m);
            REQUIRE(rep.accuracy == doctest::Approx(oracle.accuracy).epsilon(1e-15));
            std::uint64_t support_sum = 0;
            for (std::size_t c = 0; c < m; ++c) {
                const auto &pc = rep.per_class[c];
                REQUIRE(pc.precision.value == doctest::Approx(oracle.precision[c]).epsilon(1e-15));
                REQUIRE(pc.recall.value == doctest::Approx(oracle.recall[c]).epsilon(1e-15));
                REQUIRE(pc.f1.value == doctest::Approx(oracle.f1[c]).epsilon(1e-15));
                REQUIRE(pc.precision.defined == oracle.precision_defined[c]);
                REQUIRE(pc.recall.defined == oracle.recall_defined[c]);
                REQUIRE(pc.f1.defined == oracle.f1_defined[c]);
                REQUIRE(pc.support == oracle.support[c]);
                support_sum += pc.support;
                for (const Rate &r : { pc.precision, pc.recall, pc.f1 }) {
                    REQUIRE(r.value >= 0.0);
                    REQUIRE(r.value <= 1.0);
                }
            }
            REQUIRE(support_sum == n);
        }
    }

    TEST_CASE("micro averages equal accuracy; integer identities hold") {
        std::mt19937_64 gen(32);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = 2 + gen() % 5;
            const std::size_t n = 1 + gen() % 60;
            std::vector<std::size_t> actual(n), predicted(n);
            for (std::size_t i = 0; i < n; ++i) {
                actual[i] = gen() % m;
                predicted[i] = gen() % m;
            }
            std::vector<std::string> names(m, "");
            for (std::size_t c = 0; c < m; ++c) names[c] = std::to_string(c);
            const auto cm = build_confusion(actual, predicted, names);
            std::uint64_t tp = 0, row = 0, col = 0;
            const auto prec = precision_per_class(cm);
            const auto rec = recall_per_class(cm);
            for (std::size_t c = 0; c < m; ++c) {
                tp += cm.true_positives(c);
                row += cm.predicted_total(c);
                col += cm.support(c);
                if (prec[c].defined) REQUIRE(std::round(prec[c].value * static_cast<double>(cm.predicted_total(c))) == static_cast<double>(cm.true_positives(c)));
                if (rec[c].defined) REQUIRE(std::round(rec[c].value * static_cast<double>(cm.support(c))) == static_cast<double>(cm.true_positives(c)));
            }
            const double micro_p = static_cast<double>(tp) / static_cast<double>(row);
            const double micro_r = static_cast<double>(tp) / static_cast<double>(col);
            REQUIRE(micro_p == accuracy(cm));
            REQUIRE(micro_r == accuracy(cm));
            REQUIRE(cm.total() == n);
            REQUIRE(cm.trace() == tp);
        }
    }
}
