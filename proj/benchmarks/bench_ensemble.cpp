#include "dixkit/ensemble.hpp"
#include "dixkit/probability.hpp"

#include <benchmark/benchmark.h>
#include <fmt/format.h>

#include <random>

using namespace dixkit;

namespace {

// Three models over `samples` rows of four classes, roughly the shape of a
// cell-image test set.
predict::ModelBundle make_bundle(std::size_t samples) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<std::string> classes{ "Benign", "Early Pre-B", "Pre-B", "Pro-B" };
    std::vector<std::string> ids;
    for (std::size_t s = 0; s < samples; ++s) ids.push_back(fmt::format("img-{:06}", s));
    std::vector<predict::ProbabilityMatrix> models;
    for (int j = 0; j < 3; ++j) {
        Matrix rows(samples, classes.size());
        for (std::size_t s = 0; s < samples; ++s) {
            double total = 0.0;
            for (std::size_t c = 0; c < classes.size(); ++c) total += rows(s, c) = u(gen);
            for (std::size_t c = 0; c < classes.size(); ++c) rows(s, c) /= total;
        }
        models.push_back({ fmt::format("m{}", j), classes, ids, rows });
    }
    return predict::assemble_bundle(std::move(models));
}

void BM_SumOfProbabilities(benchmark::State &state) {
    const auto bundle = make_bundle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ensemble::sum_of_probabilities(bundle));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumOfProbabilities)->Arg(1000)->Arg(10752)->Arg(100000);

void BM_MajorityVote(benchmark::State &state) {
    const auto bundle = make_bundle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ensemble::majority_vote(bundle));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MajorityVote)->Arg(10752);

}  // namespace
