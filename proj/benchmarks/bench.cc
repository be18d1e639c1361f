#include <benchmark/benchmark.h>

#include "superhedge/casebook.h"
#include "superhedge/dual.h"
#include "superhedge/lp.h"
#include "superhedge/polar.h"
#include "superhedge/primal.h"
#include "superhedge/semistatic.h"

namespace superhedge {
namespace {

Market tree(std::int64_t max_paths) {
  return gen_random_tree({11, 2, 3, 4, true, static_cast<std::size_t>(max_paths)});
}

// Dense random LP, always feasible and bounded.
LinearProgram random_lp(std::size_t n) {
  LinearProgram lp;
  const Payoff c = gen_random_payoff(1, n);
  lp.objective = c.values;
  for (std::size_t i = 0; i < n; ++i) {
    const Payoff row = gen_random_payoff(100 + i, n);
    Rational rhs(0);
    for (const Rational& v : row.values) rhs += abs(v);
    lp.add_constraint(row.values, Relation::kLessEqual, rhs + 1);
  }
  lp.bounds.assign(n, VariableBounds::between(-10, 10));
  return lp;
}

void BM_Simplex(benchmark::State& state) {
  const LinearProgram lp = random_lp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(lp));
}
BENCHMARK(BM_Simplex)->Arg(5)->Arg(10)->Arg(20);

void BM_OmegaStar(benchmark::State& state) {
  const Market m = tree(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_omega_star(m));
  state.counters["paths"] = static_cast<double>(m.num_paths());
}
BENCHMARK(BM_OmegaStar)->Arg(10)->Arg(20)->Arg(40);

void BM_OmegaStarIterative(benchmark::State& state) {
  const Market m = tree(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_omega_star_iterative(m));
}
BENCHMARK(BM_OmegaStarIterative)->Arg(10)->Arg(20)->Arg(40);

void BM_Superhedge(benchmark::State& state) {
  const Market m = tree(state.range(0));
  const Payoff g = gen_random_payoff(3, m.num_paths());
  const PathSet target = compute_omega_star(m).omega_star;
  for (auto _ : state) benchmark::DoNotOptimize(superhedge(m, g, target));
}
BENCHMARK(BM_Superhedge)->Arg(10)->Arg(20)->Arg(40);

void BM_DualValue(benchmark::State& state) {
  const Market m = tree(state.range(0));
  const Payoff g = gen_random_payoff(3, m.num_paths());
  for (auto _ : state) benchmark::DoNotOptimize(dual_value(m, g, false));
}
BENCHMARK(BM_DualValue)->Arg(10)->Arg(40);

void BM_TwoOptionSemiStatic(benchmark::State& state) {
  const GoldenCase gc = gen_section4(default_section4_config());
  const Payoff& g2 = gc.payoffs.at("g2");
  for (auto _ : state) benchmark::DoNotOptimize(semistatic_price(gc.market, g2));
}
BENCHMARK(BM_TwoOptionSemiStatic);

}  // namespace
}  // namespace superhedge

BENCHMARK_MAIN();
