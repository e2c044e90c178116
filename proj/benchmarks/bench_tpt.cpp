#include <benchmark/benchmark.h>

#include <numbers>

#include "tpt/aim.hpp"
#include "tpt/model.hpp"
#include "tpt/quadrature.hpp"
#include "tpt/specfun.hpp"
#include "tpt/wavefn.hpp"

using namespace tpt;

namespace {

ModelParams table1() {
  ModelParams p;
  p.limit = Limit::Pseudospin;
  p.M = 1.0;
  p.C = -5.0;
  p.V1 = -0.002;
  p.V2 = 0.003;
  p.alpha = 0.01;
  return p;
}

void BM_SolveEnergies(benchmark::State& state) {
  const ModelParams p = table1();
  const QuantumState s = make_state(1, -1, p.limit);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_energies(p, s, default_window(p), grid));
}
BENCHMARK(BM_SolveEnergies)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_AimDelta(benchmark::State& state) {
  const ModelParams p = table1();
  const int k = static_cast<int>(state.range(0));
  const aim::AimProblem pb = aim_problem(p, make_state(0, -1, p.limit), k, 2 * k + 2);
  for (auto _ : state) benchmark::DoNotOptimize(aim::aim_delta(pb, -4.0003, k));
}
BENCHMARK(BM_AimDelta)->DenseRange(2, 14, 4);

void BM_AimCheckState(benchmark::State& state) {
  const ModelParams p = table1();
  const int n = static_cast<int>(state.range(0));
  const QuantumState s = make_state(n, -1, p.limit);
  for (auto _ : state) benchmark::DoNotOptimize(aim_check_state(p, s, {n + 3}, default_window(p)));
}
BENCHMARK(BM_AimCheckState)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GaussJacobi(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(nodes, 1.7, 0.4));
}
BENCHMARK(BM_GaussJacobi)->Arg(32)->Arg(128)->Arg(256);

void BM_NormQuadrature(benchmark::State& state) {
  const Exponents e = exponents_from(2.0, 0.5, 1.2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(norm_quadrature(n, e));
}
BENCHMARK(BM_NormQuadrature)->Arg(0)->Arg(3)->Arg(8);

void BM_JacobiEval(benchmark::State& state) {
  const specfun::JacobiParams jp{static_cast<int>(state.range(0)), 1.3, 0.7};
  double x = -0.37;
  for (auto _ : state) benchmark::DoNotOptimize(specfun::jacobi_eval(jp, x));
}
BENCHMARK(BM_JacobiEval)->Arg(2)->Arg(10)->Arg(50);

void BM_SampleRadial(benchmark::State& state) {
  const ModelParams p = table1();
  const QuantumState s = make_state(2, -1, p.limit);
  const double E = solve_energies(p, s, default_window(p), 4000, Convention::Analytic).roots.front().E;
  const double L = std::numbers::pi / (2.0 * p.alpha);
  std::vector<double> grid(2000);
  for (int i = 0; i < 2000; ++i) grid[i] = (i + 0.5) * L / 2000;
  for (auto _ : state) benchmark::DoNotOptimize(sample_radial(p, s, E, grid));
}
BENCHMARK(BM_SampleRadial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
