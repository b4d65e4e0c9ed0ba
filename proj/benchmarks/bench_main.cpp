#include "weilforms/classnum.hpp"
#include "weilforms/cuspgen.hpp"
#include "weilforms/eisenstein.hpp"
#include "weilforms/quadmod.hpp"

#include <benchmark/benchmark.h>

using namespace weilforms;

namespace {

void BM_ModuleConstruction(benchmark::State& state) {
    const long d = state.range(0);
    const EvenLattice L(IntMatrix{{2, 1}, {1, (1 - d) / 2}});
    for (auto _ : state) benchmark::DoNotOptimize(FiniteQuadraticModule(L).signature());
}
BENCHMARK(BM_ModuleConstruction)->Arg(5)->Arg(13)->Arg(101);

void BM_LocalDensityBrute(benchmark::State& state) {
    const EvenLattice L(IntMatrix{{2, 1}, {1, -2}});
    const Integer p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(local_density(p, L, Rational(state.range(1)), {0, 0}).value);
}
BENCHMARK(BM_LocalDensityBrute)->Args({2, 6})->Args({5, 10})->Args({3, 18});

void BM_EisensteinRank3(benchmark::State& state) {
    const EvenLattice L(IntMatrix{{-2, -1, 0}, {-1, 2, 1}, {0, 1, 2}});
    for (auto _ : state) {
        const EisensteinSeries E(L, HalfInteger(7));
        benchmark::DoNotOptimize(E.coefficient(Element(FiniteQuadraticModule(L).zero()), Rational(state.range(0))));
    }
}
BENCHMARK(BM_EisensteinRank3)->Arg(3)->Arg(12);

void BM_RSeriesD5(benchmark::State& state) {
    const EvenLattice L(IntMatrix{{-2, -1}, {-1, 2}});
    const FiniteQuadraticModule A(L);
    const CuspIndex idx{ratio(1, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})};
    for (auto _ : state) benchmark::DoNotOptimize(r_series(L, HalfInteger(10), idx, Rational(state.range(0))));
}
BENCHMARK(BM_RSeriesD5)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_HurwitzColdRange(benchmark::State& state) {
    long d = 0;
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz(d++ % 20000));
}
BENCHMARK(BM_HurwitzColdRange);

void BM_IdealWitnesses(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ideal_witnesses_q5(state.range(0)).size());
}
BENCHMARK(BM_IdealWitnesses)->Arg(19)->Arg(5 * 200 + 4)->Arg(5 * 2000 + 1);

void BM_Weight3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(weight3_cyclic(state.range(0), Rational(8)).is_zero());
}
BENCHMARK(BM_Weight3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
