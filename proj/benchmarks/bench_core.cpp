#include <benchmark/benchmark.h>

#include "bq/endomorphism.hpp"
#include "bq/families.hpp"
#include "bq/linalg.hpp"
#include "bq/random.hpp"
#include "bq/relative_ar.hpp"
#include "bq/stratify.hpp"

using namespace bq;

namespace {

AlgebraPtr chain_223(std::size_t n)
{
    std::vector<std::size_t> k(n, 2);
    k.back() = 3;
    return nakayama_from_kupisch({k, KupischShape::cyclic});
}

void BM_RankAndBases(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    SmallIntRng rng(0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rng.next(-3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_and_bases(m));
}
BENCHMARK(BM_RankAndBases)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildBnLambda(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bnlambda_family(n, std::vector<int>(n - 2, 1)));
}
BENCHMARK(BM_BuildBnLambda)->Arg(3)->Arg(5)->Arg(8);

void BM_ProjectiveResolution(benchmark::State& state)
{
    auto a = nakayama_from_kupisch({{4, 5, 5}, KupischShape::cyclic});
    auto s = simple(a, 0);
    for (auto _ : state) {
        Context ctx;
        benchmark::DoNotOptimize(ctx.projective_resolution(s, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_ProjectiveResolution)->Arg(4)->Arg(16);

void BM_GlobalDimension(benchmark::State& state)
{
    auto a = bnlambda_family(static_cast<std::size_t>(state.range(0)), std::vector<int>(state.range(0) - 2, 1));
    for (auto _ : state) {
        Context ctx;
        benchmark::DoNotOptimize(global_dimension(ctx, a));
    }
}
BENCHMARK(BM_GlobalDimension)->Arg(3)->Arg(4);

void BM_Decompose(benchmark::State& state)
{
    auto a = chain_223(static_cast<std::size_t>(state.range(0)));
    auto m = direct_sum_module({regular(a), dual_regular(a)});
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(5);

void BM_ClassifyAllOrders(benchmark::State& state)
{
    auto a = nakayama_from_kupisch({{4, 5, 5}, KupischShape::cyclic});
    for (auto _ : state) {
        Context ctx;
        benchmark::DoNotOptimize(search_orders(ctx, a));
    }
}
BENCHMARK(BM_ClassifyAllOrders);

void BM_CharacteristicTilting(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = bnlambda_family(n, std::vector<int>(n - 2, 1));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    for (auto _ : state) {
        Context ctx;
        auto s = classify_stratification(ctx, a, order);
        benchmark::DoNotOptimize(characteristic_tilting(ctx, s));
    }
}
BENCHMARK(BM_CharacteristicTilting)->Arg(3)->Arg(4);

void BM_EndomorphismAlgebra(benchmark::State& state)
{
    auto k = klein_four_like();
    auto xa = path_ideal(k, make_path(k->quiver(), {"x"}));
    for (auto _ : state)
        benchmark::DoNotOptimize(endomorphism_algebra({regular(k), xa}));
}
BENCHMARK(BM_EndomorphismAlgebra);

void BM_RelativeAR(benchmark::State& state)
{
    const auto d = static_cast<std::size_t>(state.range(0));
    auto a = nakayama_from_kupisch({{2 * d, 2 * d + 1}, KupischShape::cyclic});
    auto m = projective_truncation(a, 0, 2);
    for (auto _ : state) {
        Context ctx;
        benchmark::DoNotOptimize(relative_ar_sequence(ctx, m, 1));
    }
}
BENCHMARK(BM_RelativeAR)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
