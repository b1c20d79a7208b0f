// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fplab/closed_set.hpp"
#include "fplab/contraction.hpp"
#include "fplab/dp.hpp"
#include "fplab/volterra.hpp"

namespace {

using namespace fplab;

ClosedSet random_union(std::mt19937_64& rng, std::size_t pieces) {
  // Short intervals so that most pieces survive merging.
  std::uniform_real_distribution<double> u(-100, 100), w(0, 0.01);
  std::vector<Interval> out;
  for (std::size_t i = 0; i < pieces; ++i) {
    const double a = u(rng);
    out.push_back({a, a + w(rng)});
  }
  return ClosedSet(out);
}

void BM_Hausdorff(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ClosedSet a = random_union(rng, n), b = random_union(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(4)->Arg(64)->Arg(1024);

void BM_CertifyWorkedExample(benchmark::State& state) {
  const PiecewiseMap f = parse_single("piecewise{ [0,2]: 3 - x ; (2,3]: 3 }");
  const PiecewiseSetMap t = parse_multi("piecewise{ [0,2]: [1,2] ; (2,3]: [0,1/2] }");
  const auto cond = ConditionSpec::generalized(FFunction::log(), PhiFunction::parse("9/10*t"), 0.2, 1);
  const SampleGrid grid{static_cast<std::size_t>(state.range(0)), 1e-9};
  for (auto _ : state) benchmark::DoNotOptimize(certify(cond, f, t, grid));
}
BENCHMARK(BM_CertifyWorkedExample)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_BellmanApply(benchmark::State& state) {
  const ClosedSet unit = ClosedSet::interval(0, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const dp::Instance inst(unit, n, unit, n, parse_expr2("x*y", "x", "y"), parse_expr3("z/2", "x", "y", "z"),
                          parse_expr3("z/2", "x", "y", "z"), parse_expr2("x*y", "x", "y"));
  const dp::GridFunction h = dp::GridFunction::constant(inst.states().size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dp::bellman_apply(inst, 1, h));
}
BENCHMARK(BM_BellmanApply)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_VolterraApply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const volterra::Instance inst(parse_expr("1", {"t"}), parse_expr2("1", "t", "s"), parse_expr("t", {"t"}),
                                parse_set_expr("{x}", {"s", "x"}), n);
  const volterra::Trajectory x = volterra::Trajectory::constant(n + 1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        volterra::apply_inclusion_operator(inst, x, volterra::SelectionRule::nearest_to_current));
}
BENCHMARK(BM_VolterraApply)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
