#include "dixkit/early_stopping.hpp"
#include "dixkit/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dixkit::nn;

namespace {

struct Trace {
    std::size_t epochs_run = 0;
    std::size_t best_epoch = 0;
    std::size_t last_improvement = 0;
    bool stopped = false;
};

// Independent replay of the patience rule.
Trace oracle(const std::vector<double> &losses, std::size_t patience, double min_delta) {
    Trace t;
    double best = 0.0;
    for (std::size_t e = 1; e <= losses.size(); ++e) {
        t.epochs_run = e;
        const double v = losses[e - 1];
        if ((t.best_epoch == 0 && !std::isnan(v)) || (t.best_epoch != 0 && v < best - min_delta)) {
            best = v;
            t.best_epoch = e;
            t.last_improvement = e;
        } else if (e - t.last_improvement >= patience) {
            t.stopped = true;
            break;
        }
    }
    return t;
}

}  // namespace

TEST_SUITE("early_stopping") {
    TEST_CASE("plateau after two improvements with patience 2") {
        const std::vector<double> losses{ 1.0, 0.9, 0.9, 0.9, 0.5 };
        EarlyStopping monitor(2);
        int params = 0;
        const auto outcome = run_with_early_stopping(losses.size(), monitor, params, [&](std::size_t epoch, int &p) {
            p = static_cast<int>(epoch);
            return losses[epoch - 1];
        });
        CHECK(outcome.stopped_early);
        CHECK(outcome.epochs_run == 4);
        CHECK(outcome.best_epoch == 2);
        CHECK(params == 2);
        CHECK(monitor.state().best_metric == 0.9);
    }

    TEST_CASE("monotone improvement runs every epoch") {
        EarlyStopping monitor(10);
        int params = 0;
        const auto outcome = run_with_early_stopping(8, monitor, params, [](std::size_t e, int &p) {
            p = static_cast<int>(e);
            return 1.0 / static_cast<double>(e);
        });
        CHECK_FALSE(outcome.stopped_early);
        CHECK(outcome.epochs_run == 8);
        CHECK(params == 8);
    }

    TEST_CASE("improvements smaller than min_delta do not count") {
        EarlyStopping monitor(2, 1e-6);
        CHECK(monitor.update(1, 1.0));
        CHECK_FALSE(monitor.update(2, 1.0 - 5e-7));
        CHECK(monitor.update(3, 1.0 - 2e-6));
        CHECK_FALSE(monitor.update(4, 1.0 - 2e-6));
        CHECK_FALSE(monitor.should_stop());
        CHECK_FALSE(monitor.update(5, 2.0));
        CHECK(monitor.should_stop());
        CHECK(monitor.state().best_epoch == 3);
    }

    TEST_CASE("NaN never improves") {
        EarlyStopping monitor(3);
        CHECK_FALSE(monitor.update(1, NAN));
        CHECK(monitor.update(2, 5.0));
        CHECK_FALSE(monitor.update(3, NAN));
        CHECK(monitor.state().epochs_since_improvement == 1);
    }

    TEST_CASE("best parameters are restored when the budget runs out") {
        const std::vector<double> losses{ 3.0, 1.0, 2.0, 2.5 };
        EarlyStopping monitor(5);
        int params = 0;
        const auto outcome = run_with_early_stopping(losses.size(), monitor, params, [&](std::size_t e, int &p) {
            p = static_cast<int>(e) * 10;
            return losses[e - 1];
        });
        CHECK_FALSE(outcome.stopped_early);
        CHECK(outcome.best_epoch == 2);
        CHECK(params == 20);
    }

    TEST_CASE("synthetic sequences against the replay oracle") {
        std::mt19937_64 gen(41);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t patience = 1 + gen() % 6;
            const std::size_t length = 1 + gen() % 40;
            // Coarse values make exact plateaus common.
            std::vector<double> losses(length);
            for (auto &v : losses) v = static_cast<double>(gen() % 8) * 0.125;
            EarlyStopping monitor(patience);
            int params = -1;
            const auto outcome = run_with_early_stopping(length, monitor, params, [&](std::size_t e, int &p) {
                p = static_cast<int>(e);
                return losses[e - 1];
            });
            const Trace t = oracle(losses, patience, 1e-6);
            REQUIRE(outcome.epochs_run == t.epochs_run);
            REQUIRE(outcome.best_epoch == t.best_epoch);
            REQUIRE(outcome.stopped_early == t.stopped);
            REQUIRE(params == static_cast<int>(t.best_epoch));
            if (outcome.stopped_early) REQUIRE(outcome.epochs_run - t.last_improvement == patience);
            REQUIRE(monitor.state().epochs_since_improvement <= patience);
        }
    }

    TEST_CASE("patience must be positive") { CHECK_THROWS_AS(EarlyStopping(0), dixkit::InvalidArgument); }
}
