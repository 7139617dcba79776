#include <benchmark/benchmark.h>

#include <vector>

#include "gwbox/gauss.hpp"
#include "gwbox/geometry.hpp"
#include "gwbox/harness.hpp"
#include "gwbox/matching.hpp"
#include "gwbox/metrics.hpp"
#include "gwbox/rng.hpp"
#include "gwbox/uncertainty.hpp"

namespace {

gwbox::Box random_box(gwbox::Rng& rng) {
    gwbox::Box b;
    b.w = rng.uniform(0.05, 0.5);
    b.h = rng.uniform(0.05, 0.5);
    b.cx = rng.uniform(b.w / 2.0, 1.0 - b.w / 2.0);
    b.cy = rng.uniform(b.h / 2.0, 1.0 - b.h / 2.0);
    return b;
}

void BM_Giou(benchmark::State& state) {
    gwbox::Rng rng(1);
    const gwbox::Box a = random_box(rng);
    const gwbox::Box b = random_box(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwbox::giou(a, b));
    }
}
BENCHMARK(BM_Giou);

void BM_GromovWassersteinSq(benchmark::State& state) {
    gwbox::Rng rng(2);
    const gwbox::GaussGT2 g = gwbox::gt_to_gaussian(random_box(rng));
    const gwbox::GaussPred4 p = gwbox::pred_to_gaussian(
        random_box(rng), {rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5),
                          rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwbox::gromov_wasserstein_sq(g, p));
    }
}
BENCHMARK(BM_GromovWassersteinSq);

// Wall time of the uncertainty algorithm is linear in the division count k.
void BM_LocalizationUncertainty(benchmark::State& state) {
    gwbox::Rng rng(3);
    const gwbox::GaussPred4 p =
        gwbox::pred_to_gaussian(random_box(rng), {0.05, 0.05, 0.05, 0.05});
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwbox::localization_uncertainty(p, k));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LocalizationUncertainty)->DenseRange(100, 600, 100)->Complexity(benchmark::oN);

void BM_Hungarian(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    gwbox::Rng rng(4);
    gwbox::CostMatrix c;
    c.rows = n;
    c.cols = n;
    c.entries.resize(n * n);
    for (auto& v : c.entries) v = rng.uniform(-1.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwbox::hungarian(c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_CalibrationScene(benchmark::State& state) {
    const auto scenes = gwbox::gen_synthetic(42, 10, 10, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwbox::calibration_experiment(scenes, 100, 1));
    }
}
BENCHMARK(BM_CalibrationScene);

}  // namespace

BENCHMARK_MAIN();
