// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "tnear/kernels.hpp"
#include "tnear/reproduce.hpp"

using namespace tnear;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

BandedToeplitz bench_toeplitz(std::size_t n) {
    return BandedToeplitz(n, 5, random_vector(5, 1), 4.0, random_vector(5, 2));
}

Matrix bench_dense(std::size_t n) {
    Matrix a(n, n);
    const auto v = random_vector(n * n, 3);
    for (std::size_t i = 0; i < n; ++i) std::copy_n(v.begin() + static_cast<long>(i * n), n, a.row(i).begin());
    return a;
}

template <bool Parallel>
void BM_ToeplitzMatvec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto t = bench_toeplitz(n);
    const auto x = random_vector(n, 4);
    std::vector<double> y(n);
    for (auto _ : state) {
        if constexpr (Parallel) kernels::toeplitz_matvec(t, x, y);
        else reference::toeplitz_matvec(t, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_DenseMatvec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = bench_dense(n);
    const auto x = random_vector(n, 5);
    std::vector<double> y(n);
    for (auto _ : state) {
        if constexpr (Parallel) kernels::dense_matvec(a, x, y);
        else reference::dense_matvec(a, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <Execution Exec>
void BM_PentadiagonalSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pentadiagonal_sweep(kPentadiagonalSweep, Exec));
}

template <Execution Exec>
void BM_TridiagonalSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tridiagonal_sweep(kTridiagonalSweep, Exec));
}

}  // namespace

BENCHMARK(BM_ToeplitzMatvec<false>)->Name("toeplitz_matvec/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_ToeplitzMatvec<true>)->Name("toeplitz_matvec/parallel")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_DenseMatvec<false>)->Name("dense_matvec/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_DenseMatvec<true>)->Name("dense_matvec/parallel")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_PentadiagonalSweep<Execution::Serial>)->Name("pentadiagonal_sweep/serial");
BENCHMARK(BM_PentadiagonalSweep<Execution::Parallel>)->Name("pentadiagonal_sweep/parallel");
BENCHMARK(BM_TridiagonalSweep<Execution::Serial>)->Name("tridiagonal_sweep/serial");
BENCHMARK(BM_TridiagonalSweep<Execution::Parallel>)->Name("tridiagonal_sweep/parallel");

BENCHMARK_MAIN();
