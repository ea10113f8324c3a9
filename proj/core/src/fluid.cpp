#include "udw/fluid.hpp"

#include <algorithm>
#include <cmath>

#include "udw/quadcore.hpp"

namespace udw {

namespace {

void check_mu(const ModelParams& params) {
  const double ell2 = params.ell * params.ell;
  if (params.mu >= ell2) {
    const double x_div = std::acosh(std::sqrt(params.mu / ell2));
    throw FluidError("pressure divergent at r = " +
                     std::to_string(params.ell * x_div) + " (mu >= ell^2)");
  }
  if (params.mu <= 0.0) {
    throw FluidError("mu must be positive (density asymptote 2/(mu ell^2 r))");
  }
}

// ell^2 * g_excited(x): nondimensional mode-squared profile.
double ghat(double x, const ModelParams& params) {
  return params.ell * params.ell * g_excited(x, params);
}

double prefactor(double x, double mu_hat) {
  const double s = 1.0 / std::cosh(x);
  return 1.0 - mu_hat * s * s;
}

}  // namespace

std::vector<double> default_grid(double x_max, int points) {
  std::vector<double> g(points);
  const double x0 = 1e-3;
  for (int i = 0; i < points; ++i) {
    g[i] = x0 + (x_max - x0) * i / (points - 1);
  }
  return g;
}

double source_G(double x, const ModelParams& params, const DetectorState& state) {
  double value;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    value = 4.0 * x * (1.0 - 5.0 / 3.0 * x2 + 77.0 / 45.0 * x2 * x2);
  } else {
    const double s = 1.0 / std::cosh(x);
    const double t = std::tanh(x);
    value = 4.0 * s * s * t * t / x;
  }
  if (state.kind == DetectorState::Kind::Excited) {
    const double s = 1.0 / std::cosh(x);
    value += params.alpha * ghat(x, params) * s * s * std::tanh(x);
  } else if (state.kind == DetectorState::Kind::Mixture) {
    throw FluidError("source_G: mixtures are combined at the tensor level");
  }
  return value;
}

double pressure_quadrature_at(double x, const ModelParams& params,
                              const DetectorState& state) {
  check_mu(params);
  auto g = [&](double xx) { return source_G(xx, params, state); };
  const QuadResult q = integrate_tail(g, x, 0.5);
  return q.value / prefactor(x, params.mu_hat());
}

std::vector<double> pressure_quadrature(const ModelParams& params,
                                        const DetectorState& state,
                                        const std::vector<double>& grid) {
  check_mu(params);
  auto g = [&](double xx) { return source_G(xx, params, state); };
  const std::size_t n = grid.size();
  std::vector<double> p(n);
  // Accumulate int_x^inf G from the far end inward.
  double q = integrate_tail(g, grid.back(), 0.5).value;
  p[n - 1] = q / prefactor(grid[n - 1], params.mu_hat());
  for (std::size_t i = n - 1; i-- > 0;) {
    q += integrate(g, grid[i], grid[i + 1]).value;
    p[i] = q / prefactor(grid[i], params.mu_hat());
  }
  return p;
}

std::vector<double> pressure_ode(const ModelParams& params,
                                 const DetectorState& state,
                                 const std::vector<double>& grid) {
  check_mu(params);
  const double mu_hat = params.mu_hat();
  auto dpdx = [&](double x, double p) {
    const double s = 1.0 / std::cosh(x);
    const double t = std::tanh(x);
    return -(2.0 * mu_hat * s * s * t * p + source_G(x, params, state)) /
           (1.0 - mu_hat * s * s);
  };

  const double h_max = 1e-3;
  double x = 30.0;
  double p = 0.0;
  std::vector<double> out(grid.size());
  for (std::size_t i = grid.size(); i-- > 0;) {
    const double target = grid[i];
    const int steps = std::max(1, static_cast<int>(std::ceil((x - target) / h_max)));
    const double h = -(x - target) / steps;
    for (int k = 0; k < steps; ++k) {
      const double k1 = dpdx(x, p);
      const double k2 = dpdx(x + 0.5 * h, p + 0.5 * h * k1);
      const double k3 = dpdx(x + 0.5 * h, p + 0.5 * h * k2);
      const double k4 = dpdx(x + h, p + h * k3);
      p += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      x += h;
    }
    x = target;
    out[i] = p;
  }
  return out;
}

std::vector<double> density(const ModelParams& params, const DetectorState& state,
                            const std::vector<double>& grid,
                            const std::vector<double>& pressure) {
  check_mu(params);
  const double ell4 = std::pow(params.ell, 4);
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // -rho + 3 eta P = L_fluid, by construction of the on-shell Lagrangian.
    rho[i] = 3.0 * params.eta * pressure[i] -
             ell4 * fluid_onshell_lagrangian(grid[i], params, state);
  }
  return rho;
}

FluidSolution solve_fluid(const ModelParams& params, const DetectorState& state,
                          const std::vector<double>& grid) {
  FluidSolution sol;
  sol.params = params;
  sol.state = state;
  sol.grid = grid;
  sol.pressure = pressure_quadrature(params, state, grid);
  sol.density = density(params, state, grid, sol.pressure);
  sol.w = eos_w(sol.density, sol.pressure);
  return sol;
}

EnergyConditionMargins energy_condition_margins(const std::vector<double>& density,
                                                const std::vector<double>& pressure) {
  if (density.size() != pressure.size() || density.empty()) {
    throw std::invalid_argument("energy_condition_margins: mismatched grids");
  }
  EnergyConditionMargins m{1e300, 1e300, 1e300};
  for (std::size_t i = 0; i < density.size(); ++i) {
    m.rho_plus_P = std::min(m.rho_plus_P, density[i] + pressure[i]);
    m.rho_plus_3P = std::min(m.rho_plus_3P, density[i] + 3.0 * pressure[i]);
    m.rho_minus_absP = std::min(m.rho_minus_absP, density[i] - std::abs(pressure[i]));
  }
  return m;
}

std::vector<double> eos_w(const std::vector<double>& density,
                          const std::vector<double>& pressure) {
  if (density.size() != pressure.size()) {
    throw std::invalid_argument("eos_w: mismatched grids");
  }
  std::vector<double> w(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    if (!(density[i] > 0.0)) throw FluidError("eos_w: density must be positive");
    w[i] = pressure[i] / density[i];
  }
  return w;
}

MuStar mu_star(double eta, double ell) {
  const double ell2 = ell * ell;
  if (eta > 1.0 / 3.0) return {ell2, true};
  if (eta == 1.0 / 3.0) return {ell2, false};
  const double g0 = g0_constant();
  // (3 eta - 1) P(0; mu) + 2/mu = 0 with ell^4 P(0) = g0/(1 - mu_hat)
  auto margin = [&](double mu_hat) {
    return 2.0 / mu_hat - (1.0 - 3.0 * eta) * g0 / (1.0 - mu_hat);
  };
  const double root = bisect_root(margin, 1e-9, 1.0 - 1e-12, 1e-12);
  return {root * ell2, false};
}

}  // namespace udw
