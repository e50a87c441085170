#include "dixkit/augment.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dixkit;

namespace {

Image random_rgb(std::size_t w, std::size_t h) {
    std::mt19937_64 gen(3);
    Image img(w, h, 3);
    for (auto &v : img.data()) v = static_cast<std::uint8_t>(gen());
    return img;
}

void BM_GaussianBlur(benchmark::State &state) {
    const Image img = random_rgb(224, 224);
    const double sigma = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(augment::gaussian_blur(img, sigma));
}
BENCHMARK(BM_GaussianBlur)->Arg(5)->Arg(10)->Arg(30);

void BM_MedianFilter(benchmark::State &state) {
    const Image img = random_rgb(224, 224);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(augment::median_filter(img, k));
}
BENCHMARK(BM_MedianFilter)->Arg(3)->Arg(5);

void BM_Pipeline(benchmark::State &state) {
    const Image img = random_rgb(224, 224);
    const auto spec = augment::parse_spec(
        "seed=7\nop=random_crop fraction=0.9\nop=hflip\nop=gaussian_blur sigma=1.0\nop=additive_gaussian_noise scale=10\n");
    for (auto _ : state) benchmark::DoNotOptimize(augment::apply_pipeline(img, spec));
}
BENCHMARK(BM_Pipeline);

}  // namespace
