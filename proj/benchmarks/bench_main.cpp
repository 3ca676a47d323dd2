#include "conesing/demazure.hpp"
#include "conesing/enumerator.hpp"
#include "conesing/quotient.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric.hpp"

#include <benchmark/benchmark.h>

using namespace conesing;

namespace {

CurveCouple sample_couple() {
  return CurveCouple(QDivisor{{pt(0), parse_rational("3/7")}, {pt(1), parse_rational("2/5")},
                              {pt_inf(), Rational(2)}});
}

void BM_HjChain(benchmark::State& state) {
  LatticeCone2 cone{Integer(state.range(0)), Integer(state.range(0) - 1)};
  for (auto _ : state) benchmark::DoNotOptimize(hj_chain(cone));
}
BENCHMARK(BM_HjChain)->Arg(7)->Arg(101)->Arg(10007);

void BM_BuildGraph(benchmark::State& state) {
  CurveCouple c = sample_couple();
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(c));
}
BENCHMARK(BM_BuildGraph);

void BM_MldVertex(benchmark::State& state) {
  CurveCouple c = sample_couple();
  for (auto _ : state) benchmark::DoNotOptimize(mld_vertex(c));
}
BENCHMARK(BM_MldVertex);

void BM_VertexLogDiscrepancy(benchmark::State& state) {
  CurveCouple c = sample_couple();
  for (auto _ : state) benchmark::DoNotOptimize(vertex_log_discrepancy(c));
}
BENCHMARK(BM_VertexLogDiscrepancy);

void BM_HilbertSeries(benchmark::State& state) {
  CurveCouple c = sample_couple();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(c));
}
BENCHMARK(BM_HilbertSeries);

void BM_PresentationA(benchmark::State& state) {
  Rational f = Rational(1) / state.range(0);
  CurveCouple c(QDivisor{{pt(0), f}, {pt_inf(), f}});
  std::int64_t bound = default_presentation_bound(c);
  for (auto _ : state) benchmark::DoNotOptimize(presentation(c, bound, bound));
}
BENCHMARK(BM_PresentationA)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ToricLatticeMld(benchmark::State& state) {
  Fan f = weighted_plane(2, 3);
  ToricDivisor d{{Rational(0), Rational(0), Rational(1)}};
  ConeOfX cone = cone_of_x(f, d);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_mld(cone));
}
BENCHMARK(BM_ToricLatticeMld)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  SearchParams p{Rational(1) / state.range(0), Integer(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(p, 1));
}
BENCHMARK(BM_Enumerate)->Args({1, 6})->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
