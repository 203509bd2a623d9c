#include <benchmark/benchmark.h>

#include <random>

#include "iep/eigen.hpp"
#include "iep/problems.hpp"
#include "iep/solver.hpp"

namespace {

using namespace iep;

Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = dist(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

void BM_SymEigen(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_symmetric(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(a));
}
BENCHMARK(BM_SymEigen)->Arg(5)->Arg(10)->Arg(20)->Arg(50);

void BM_CayleyUpdate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    Matrix y(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double v = dist(rng);
            y(i, j) = v;
            y(j, i) = -v;
        }
    const Matrix p = Matrix::identity(n);
    for (auto _ : state) benchmark::DoNotOptimize(cayley_update(p, y));
}
BENCHMARK(BM_CayleyUpdate)->Arg(5)->Arg(10)->Arg(20);

void BM_SolveToeplitz(benchmark::State& state) {
    const IepProblem pb = example1();
    const Vector c0 = {1, 5, 10, 15, 20};
    SolverOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(solve_modified(pb, c0, opts));
}
BENCHMARK(BM_SolveToeplitz);

void BM_SolveToeplitzHankel(benchmark::State& state) {
    const IepProblem pb = example2();
    const Vector c0 = {1, 2, 3, 4, 5, 6, 7};
    SolverOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(solve_modified(pb, c0, opts));
}
BENCHMARK(BM_SolveToeplitzHankel);

}  // namespace

BENCHMARK_MAIN();
