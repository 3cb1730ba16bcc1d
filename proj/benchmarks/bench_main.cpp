#include <benchmark/benchmark.h>

#include "vstokes/deposit.hpp"
#include "vstokes/initial_data.hpp"
#include "vstokes/metrics.hpp"
#include "vstokes/push.hpp"
#include "vstokes/stokes.hpp"

using namespace vstokes;

namespace {

constexpr double kBox = 8.0;

PhaseEnsemble ensemble(std::size_t n) {
  InitialData init;
  init.center_x = Vec3(4.0, 4.0, 5.0);
  return sample_ensemble(init, n, 7, kBox);
}

ScalarField density(int n) { return deposit_density(ensemble(100000), n); }

void BM_DepositMoments(benchmark::State& state) {
  const auto e = ensemble(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deposit_moments(e, 64));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DepositMoments)->Arg(10000)->Arg(100000);

void BM_StokesSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ScalarField rho = density(n);
  for (auto _ : state) benchmark::DoNotOptimize(solve_limit_fluid(rho, Vec3(0, 0, -1)));
}
BENCHMARK(BM_StokesSolve)->Arg(32)->Arg(64);

void BM_ParticleCouplingApply(benchmark::State& state) {
  const auto e = ensemble(100000);
  const ParticleCoupling coupling(e, 64);
  const VectorField u = solve_limit_fluid(deposit_density(e, 64), Vec3(0, 0, -1));
  for (auto _ : state) benchmark::DoNotOptimize(coupling.apply(u));
}
BENCHMARK(BM_ParticleCouplingApply);

void BM_BrinkmanColdStart(benchmark::State& state) {
  const auto e = ensemble(100000);
  const auto m = deposit_moments(e, 64);
  const ParticleCoupling coupling(e, 64);
  const VectorField zero(64, kBox);
  BrinkmanOptions opts;
  for (auto _ : state) {
    auto r = solve_brinkman([&](const VectorField& u) { return coupling.apply(u); }, m.j, zero, opts);
    state.counters["iterations"] = r.report.iterations;
  }
}
BENCHMARK(BM_BrinkmanColdStart)->Unit(benchmark::kMillisecond);

void BM_Push(benchmark::State& state) {
  auto e = ensemble(100000);
  const VectorField u = solve_limit_fluid(deposit_density(e, 64), Vec3(0, 0, -1));
  for (auto _ : state)
    push_in_place(e, u, 50.0, Vec3(0, 0, -1), 0.005, PushScheme::exponential_midpoint);
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_Push);

void BM_DLambdaDelta(benchmark::State& state) {
  const ScalarField a = density(64);
  ScalarField b = a;
  b *= 0.9;
  for (auto _ : state) benchmark::DoNotOptimize(d_lambda_delta(a, b, 0.4, 0.0));
}
BENCHMARK(BM_DLambdaDelta)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
