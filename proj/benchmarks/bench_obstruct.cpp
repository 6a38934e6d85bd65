#include <random>

#include <benchmark/benchmark.h>

#include "obstruct/knots.hpp"
#include "obstruct/scenario.hpp"
#include "obstruct/seifert.hpp"
#include "obstruct/smith.hpp"
#include "obstruct/zpoly.hpp"

using namespace obstruct;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_Determinant(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_TorusSignature(benchmark::State& state) {
  const auto v = torus_knot_seifert(state.range(0), state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(signature(v));
}
BENCHMARK(BM_TorusSignature)->Arg(3)->Arg(5)->Arg(7);

void BM_TorusAlexander(benchmark::State& state) {
  const auto v = torus_knot_seifert(state.range(0), state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(v));
}
BENCHMARK(BM_TorusAlexander)->Arg(3)->Arg(5)->Arg(7);

void BM_FactorCyclotomicProduct(benchmark::State& state) {
  const IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(state.range(0))) - IntPoly::constant(1);
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorCyclotomicProduct)->Arg(12)->Arg(30)->Arg(60);

void BM_FoxMilnorSquare(benchmark::State& state) {
  const auto d = alexander_polynomial(torus_knot_seifert(2, 7));
  const auto sq = d * d;
  for (auto _ : state) benchmark::DoNotOptimize(fox_milnor(sq, 40));
}
BENCHMARK(BM_FoxMilnorSquare);

void BM_Scenario(benchmark::State& state) {
  Scenario s;
  s.kind = ScenarioKind::TorusSolid;
  s.knot_j = knot_by_name("trefoil");
  s.knot_k = knot_by_name("trefoil");
  s.n = 3;
  for (auto _ : state) benchmark::DoNotOptimize(render(run_scenario(s), ReportFormat::Json));
}
BENCHMARK(BM_Scenario);

void BM_TwistExtension(benchmark::State& state) {
  Scenario s;
  s.kind = ScenarioKind::TwistExtension;
  s.p = 6;
  s.q = 7;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s));
}
BENCHMARK(BM_TwistExtension)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
