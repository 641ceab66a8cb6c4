#include <benchmark/benchmark.h>

#include <random>

#include "friezemod/dynomial.hpp"
#include "friezemod/monomial.hpp"
#include "friezemod/tables.hpp"

using namespace friezemod;

static void BM_ProductDirect(benchmark::State& state) {
    const Modulus m(1'000'003);
    std::mt19937_64 rng(1);
    std::vector<std::int64_t> t(static_cast<std::size_t>(state.range(0)));
    for (auto& v : t) v = static_cast<std::int64_t>(rng() % 1'000'003);
    for (auto _ : state) benchmark::DoNotOptimize(m_n(m, t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductDirect)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ProductViaContinuants(benchmark::State& state) {
    const Modulus m(1'000'003);
    std::mt19937_64 rng(1);
    std::vector<std::int64_t> t(static_cast<std::size_t>(state.range(0)));
    for (auto& v : t) v = static_cast<std::int64_t>(rng() % 1'000'003);
    for (auto _ : state) benchmark::DoNotOptimize(m_n_via_continuants(m, t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductViaContinuants)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_MinimalMonomialSize(benchmark::State& state) {
    const Modulus m(state.range(0));
    for (auto _ : state) {
        for (std::int64_t k = 0; k < state.range(0); ++k) benchmark::DoNotOptimize(minimal_monomial_size(m, k).size);
    }
}
BENCHMARK(BM_MinimalMonomialSize)->Arg(47)->Arg(491)->Arg(4999);

static void BM_StructuredTwoDynomial(benchmark::State& state) {
    const Modulus m(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(structured_dynomial_reducibility(m, 2).result.verdict);
}
BENCHMARK(BM_StructuredTwoDynomial)->Arg(59)->Arg(193)->Arg(491);

static void BM_FindReductionDynomial(benchmark::State& state) {
    const Modulus m(state.range(0));
    const CTuple t = minimal_dynomial_size(m, 2).tuple();
    for (auto _ : state) {
        WorkBudget budget;
        benchmark::DoNotOptimize(find_reduction(t, budget).verdict);
    }
}
BENCHMARK(BM_FindReductionDynomial)->Arg(11)->Arg(59)->Arg(73);

static void BM_TwoDynomialTable(benchmark::State& state) {
    const auto primes = two_dynomial_primes(state.range(0));
    for (auto _ : state) {
        WorkBudget budget;
        benchmark::DoNotOptimize(two_dynomial_table(primes, budget));
    }
}
BENCHMARK(BM_TwoDynomialTable)->Arg(491)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
