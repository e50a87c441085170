#include "dixkit/metrics.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dixkit;

namespace {

void BM_FullReport(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 gen(5);
    std::vector<std::size_t> actual(n);
    std::vector<std::size_t> predicted(n);
    for (std::size_t i = 0; i < n; ++i) {
        actual[i] = gen() % 4;
        predicted[i] = gen() % 10 == 0 ? gen() % 4 : actual[i];
    }
    const std::vector<std::string> names{ "Benign", "Early Pre-B", "Pre-B", "Pro-B" };
    for (auto _ : state) benchmark::DoNotOptimize(metrics::full_report(actual, predicted, names));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullReport)->Arg(10752)->Arg(1000000);

}  // namespace
