#include <benchmark/benchmark.h>

#include <cmath>

#include "udw/fluid.hpp"
#include "udw/modes.hpp"
#include "udw/quadcore.hpp"
#include "udw/response.hpp"
#include "udw/stress.hpp"

using namespace udw;

namespace {

void BM_g0_quadrature(benchmark::State& state) {
  for (auto _ : state) {
    const double g0 = integrate_tail(
        [](double x) {
          return source_G(x, ModelParams{}, DetectorState::ground());
        },
        0.0, 0.5).value;
    benchmark::DoNotOptimize(g0);
  }
}
BENCHMARK(BM_g0_quadrature);

void BM_fluid_solve(benchmark::State& state) {
  ModelParams p;
  const auto grid = default_grid(12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto sol = solve_fluid(p, DetectorState::ground(), grid);
    benchmark::DoNotOptimize(sol.pressure.data());
  }
}
BENCHMARK(BM_fluid_solve)->Arg(600)->Arg(2401);

void BM_tensor_assembly_and_conservation(benchmark::State& state) {
  ModelParams p;
  const auto grid = default_grid(12.0, 2401);
  const auto fluid = solve_fluid(p, DetectorState::excited(), grid);
  for (auto _ : state) {
    const auto tensor = assemble_total(p, DetectorState::excited(), fluid);
    const auto res = conservation_residual(tensor);
    benchmark::DoNotOptimize(res.sup);
  }
}
BENCHMARK(BM_tensor_assembly_and_conservation);

void BM_shooting(benchmark::State& state) {
  auto well = [](double x) {
    const double s = 1.0 / std::cosh(x);
    return -6.0 * s * s;
  };
  for (auto _ : state) {
    auto modes = shoot_bound_states(well, 5.0, 0);
    benchmark::DoNotOptimize(modes.data());
  }
}
BENCHMARK(BM_shooting);

void BM_excitation_probability(benchmark::State& state) {
  ModelParams p;
  for (auto _ : state) {
    const auto r = excitation_probability(-1.0, 1.0, p);
    benchmark::DoNotOptimize(r.L);
  }
}
BENCHMARK(BM_excitation_probability);

}  // namespace

BENCHMARK_MAIN();
