#include "oracles.hpp"

#include "dixkit/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

using namespace dixkit;

TEST_SUITE("rng") {
    TEST_CASE("published SplitMix64 outputs for seed 1234567") {
        CounterRng rng(1234567);
        CHECK(rng.next_u64() == 6457827717110365317ULL);
        CHECK(rng.next_u64() == 3203168211198807973ULL);
        CHECK(rng.next_u64() == 9817491932198370423ULL);
        CHECK(rng.next_u64() == 4593380528125082431ULL);
        CHECK(rng.next_u64() == 16408922859458223821ULL);
    }

    TEST_CASE("counter form matches the stateful reference for many keys") {
        for (std::uint64_t key : { 0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL, 0x9E3779B97F4A7C15ULL }) {
            CounterRng rng(key);
            testing::ReferenceSplitMix64 ref(key);
            for (int i = 0; i < 1000; ++i) {
                REQUIRE(rng.next_u64() == ref.next());
            }
            CHECK(rng.counter() == 1000);
        }
    }

    TEST_CASE("uniform stays in [0, 1) and uniform_open_zero in (0, 1]") {
        CounterRng a(9);
        CounterRng b(9);
        double sum = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const double u = a.uniform();
            REQUIRE(u >= 0.0);
            REQUIRE(u < 1.0);
            const double v = b.uniform_open_zero();
            REQUIRE(v > 0.0);
            REQUIRE(v <= 1.0);
            sum += u;
        }
        CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
    }

    TEST_CASE("uniform_int covers the range evenly") {
        CounterRng rng(3);
        std::vector<int> hits(7, 0);
        for (int i = 0; i < 70000; ++i) {
            const auto v = rng.uniform_int(7);
            REQUIRE(v < 7);
            ++hits[v];
        }
        for (int h : hits) {
            CHECK(std::abs(h - 10000) < 400);
        }
        CounterRng one(5);
        CHECK(one.uniform_int(1) == 0);
    }

    TEST_CASE("normal draws two words and has unit moments") {
        CounterRng rng(11);
        double sum = 0.0;
        double sq = 0.0;
        const int n = 200000;
        for (int i = 0; i < n; ++i) {
            const double z = rng.normal();
            REQUIRE(std::isfinite(z));
            sum += z;
            sq += z * z;
        }
        CHECK(rng.counter() == 2ULL * n);
        const double mean = sum / n;
        CHECK(std::abs(mean) < 0.01);
        CHECK(std::abs(sq / n - mean * mean - 1.0) < 0.02);
    }

    TEST_CASE("shuffle is a deterministic permutation") {
        std::vector<int> a(50);
        std::iota(a.begin(), a.end(), 0);
        std::vector<int> b = a;
        CounterRng ra(77);
        CounterRng rb(77);
        shuffle(std::span<int>(a), ra);
        shuffle(std::span<int>(b), rb);
        CHECK(a == b);
        std::vector<int> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(50);
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(sorted == expect);
        CHECK(a != expect);
    }

    TEST_CASE("mix_seed separates streams") {
        std::set<std::uint64_t> seen;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            for (std::uint64_t stream = 0; stream < 50; ++stream) {
                seen.insert(mix_seed(seed, stream));
            }
        }
        CHECK(seen.size() == 1000);
        CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    }
}
