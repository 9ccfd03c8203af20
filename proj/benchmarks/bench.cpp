#include <benchmark/benchmark.h>

#include "hermitian/blocks.hpp"
#include "hermitian/dimension.hpp"
#include "hermitian/hilbert.hpp"
#include "hermitian/symmetric.hpp"

using namespace hermitian;

static void BM_Schur(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const VarLayout layout{n, 0, false};
    for (auto _ : state)
        benchmark::DoNotOptimize(schur({4, 3, 2, 1}, layout, 12, 0, n));
}
BENCHMARK(BM_Schur)->DenseRange(3, 6);

static void BM_Dimension(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const Partition shape({9, 7, 7, 4, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(dim_partition(shape, n));
}
BENCHMARK(BM_Dimension)->RangeMultiplier(4)->Range(8, 512);

static void BM_VerifyIdentity(benchmark::State &state)
{
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identity({IdentityFamily::LittlewoodII}, {0, 0, 4}, cap));
}
BENCHMARK(BM_VerifyIdentity)->DenseRange(6, 14, 4);

static void BM_DualCauchy(benchmark::State &state)
{
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_identity({IdentityFamily::DualCauchy}, {p, p, 0}, 10));
}
BENCHMARK(BM_DualCauchy)->DenseRange(2, 4);

static void BM_Congruence(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const BlockPair pair = family_config(FamilyCfg::of(FamilyKind::II, n + 5, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(congruence_check(pair));
}
BENCHMARK(BM_Congruence)->DenseRange(2, 6, 2);

static void BM_Hilbert(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert(FamilyCfg::of(FamilyKind::II, 2 * k + 6, k)));
}
BENCHMARK(BM_Hilbert)->DenseRange(1, 3);

BENCHMARK_MAIN();
