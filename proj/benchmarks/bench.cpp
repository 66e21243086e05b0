// Microbenchmarks for the hot paths: transvectants, Wronskians, extractor
// setup versus reuse, and the kernel/recovery pipeline. All arithmetic is
// exact, so these mostly measure GMP traffic.
#include <benchmark/benchmark.h>

#include <vector>

#include <wrcomb/combinant.hpp>
#include <wrcomb/grassmann.hpp>
#include <wrcomb/transvectant.hpp>
#include <wrcomb/verify.hpp>
#include <wrcomb/wronskian.hpp>

using namespace wrcomb;
namespace verify = wrcomb::verify;

namespace {

std::vector<BinaryForm> sample_forms(int r, int d, std::uint64_t seed) {
    verify::Rng rng(seed);
    return verify::random_independent_forms(rng, r, d);
}

void bm_transvectant(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    verify::Rng rng(21);
    BinaryForm e = verify::random_nonzero_form(rng, d);
    BinaryForm f = verify::random_nonzero_form(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(transvectant(e, f, k));
}
BENCHMARK(bm_transvectant)->Args({8, 1})->Args({8, 4})->Args({8, 8})->Args({16, 8});

void bm_wronskian(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    auto forms = sample_forms(r, d, 22);
    for (auto _ : state) benchmark::DoNotOptimize(wronskian(forms));
}
BENCHMARK(bm_wronskian)->Args({2, 8})->Args({4, 8})->Args({5, 10});

void bm_bordered_reuse(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    auto head = sample_forms(r, d, 23);
    BorderedWronskian bw(head);
    verify::Rng rng(24);
    BinaryForm f = verify::random_nonzero_form(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(bw(f));
}
BENCHMARK(bm_bordered_reuse)->Args({2, 8})->Args({4, 8});

void bm_extractor_setup(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        CombinantExtractor ex(r, d);
        benchmark::DoNotOptimize(&ex);
    }
}
BENCHMARK(bm_extractor_setup)->Args({2, 5})->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);

void bm_extract_cached(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    const CombinantExtractor& ex = shared_extractor(r, d);
    auto forms = sample_forms(r, d, 25);
    for (auto _ : state) benchmark::DoNotOptimize(ex.extract(forms));
}
BENCHMARK(bm_extract_cached)->Args({2, 5})->Args({3, 6})->Args({4, 8});

void bm_psi_kernel(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    CombinantVector c = wronskian_combinants(sample_forms(r, d, 26));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(psi_matrix(c)));
}
BENCHMARK(bm_psi_kernel)->Args({2, 5})->Args({4, 8});

void bm_recover(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    CombinantVector c =
        wronskian_combinants(sample_forms(r, d, 27)).scaled(Rational(3, 7));
    for (auto _ : state) benchmark::DoNotOptimize(recover_subspace(c));
}
BENCHMARK(bm_recover)->Args({2, 5})->Args({3, 6});

void bm_embed(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    verify::Rng rng(28);
    Subspace sub = verify::random_subspace(rng, r, d);
    for (auto _ : state) benchmark::DoNotOptimize(pluecker_point(sub));
}
BENCHMARK(bm_embed)->Args({2, 5})->Args({3, 6});

}  // namespace

BENCHMARK_MAIN();
