#include <benchmark/benchmark.h>

#include "gwalk/gwalk.hpp"

using namespace gwalk;

namespace {

LatticeState state_at(int t) {
  const CoinParams params(0.3);
  LatticeState state = init_state(preset_qudit("fig3", params), params);
  while (state.t < t) state = step(state);
  return state;
}

void BM_step(benchmark::State& bench) {
  const LatticeState base = state_at(static_cast<int>(bench.range(0)));
  for (auto _ : bench) {
    LatticeState next = step(base);
    benchmark::DoNotOptimize(next.amp.data());
  }
  const double sites = static_cast<double>(base.side()) * base.side();
  bench.SetItemsProcessed(static_cast<int64_t>(bench.iterations() * sites));
}
BENCHMARK(BM_step)->Arg(50)->Arg(200)->Arg(800);

void BM_joint_moment(benchmark::State& bench) {
  const LatticeState base = state_at(200);
  for (auto _ : bench) {
    const double m = joint_moment(base, 2, 0);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_joint_moment);

void BM_eigensystem(benchmark::State& bench) {
  const CoinParams params(0.3);
  const WaveNumber k(0.7, -1.1);
  for (auto _ : bench) {
    const Eigensystem eig = eigensystem(params, k);
    benchmark::DoNotOptimize(eig.lambdas.data());
  }
}
BENCHMARK(BM_eigensystem);

void BM_spectral_evolve(benchmark::State& bench) {
  const CoinParams params(0.3);
  const Qudit phi0 = preset_qudit("fig3", params);
  const int t = static_cast<int>(bench.range(0));
  for (auto _ : bench) {
    LatticeState out = spectral_evolve(params, phi0, t, 2 * t + 4);
    benchmark::DoNotOptimize(out.amp.data());
  }
}
BENCHMARK(BM_spectral_evolve)->Arg(10)->Arg(40);

void BM_ellipse_quadrature(benchmark::State& bench) {
  const CoinParams params(0.3);
  const QuadratureSpec spec{static_cast<int>(bench.range(0)),
                            static_cast<int>(bench.range(0))};
  for (auto _ : bench) {
    const double mass = ellipse_integrate(
        params, [&](double vx, double vy) { return mu_p(params, vx, vy); }, spec);
    benchmark::DoNotOptimize(mass);
  }
}
BENCHMARK(BM_ellipse_quadrature)->Arg(128)->Arg(512)->Arg(1024);

void BM_limit_moment_kspace(benchmark::State& bench) {
  const CoinParams params(0.25);
  const Qudit phi0 = preset_qudit("fig6", params);
  const int n = static_cast<int>(bench.range(0));
  for (auto _ : bench) {
    const double m = limit_moment_kspace(params, phi0, 2, 0, n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_limit_moment_kspace)->Arg(128)->Arg(256);

void BM_localization_delta(benchmark::State& bench) {
  const CoinParams params(0.37);
  const Qudit phi0 = preset_qudit("grover-sym", params);
  for (auto _ : bench) {
    const double d = localization_delta(params, phi0);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_localization_delta);

}  // namespace

BENCHMARK_MAIN();
