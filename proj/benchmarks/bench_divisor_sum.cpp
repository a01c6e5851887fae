#include <benchmark/benchmark.h>

#include "taubound/bounds.hpp"
#include "taubound/divisor_sum.hpp"

using namespace taubound;

namespace {

const QuadraticPoly& poly() {
    static const QuadraticPoly f(0, 1);
    return f;
}

const PrimeFactorTable& table() {
    static const PrimeFactorTable t(1'100'000);
    return t;
}

void BM_kronecker(benchmark::State& state) {
    std::int64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kronecker(-4, n));
        n += 2;
    }
}
BENCHMARK(BM_kronecker);

void BM_sum_sieve(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_sieve(poly(), n, table(), threads).value);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(BM_sum_sieve)
    ->Args({10'000, 1})
    ->Args({100'000, 1})
    ->Args({1'000'000, 1})
    ->Args({1'000'000, 4})
    ->Unit(benchmark::kMillisecond);

void BM_sum_naive(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_naive(poly(), n, table()).value);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(BM_sum_naive)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_root_enumeration(benchmark::State& state) {
    std::uint64_t d = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(root_enumeration(d, poly()));
        if (++d > 100'000) d = 2;
    }
}
BENCHMARK(BM_root_enumeration);

void BM_l_one(benchmark::State& state) {
    const QuadraticCharacter chi(-1);
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(l_one(chi, eps).value);
}
BENCHMARK(BM_l_one)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

void BM_theorem2_bound(benchmark::State& state) {
    const CertifiedValue l = l_one(QuadraticCharacter(-1), 1e-6);
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem2_bound(poly(), 1'000'000, l).total);
}
BENCHMARK(BM_theorem2_bound);

}  // namespace

BENCHMARK_MAIN();
