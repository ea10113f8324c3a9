#include "udw/modes.hpp"

#include <algorithm>
#include <cmath>

namespace udw {

namespace {

// tanh(x) sech(x) / x with its small-x series 1 - 5x^2/6 + 61x^4/120.
double shape(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - 5.0 * x2 / 6.0 + 61.0 * x2 * x2 / 120.0;
  }
  return std::tanh(x) / (x * std::cosh(x));
}

// d/dx [tanh(x) sech(x) / x]; series -5x/3 + 61x^3/30 near zero.
double shape_deriv(double x) {
  if (std::abs(x) < 1e-3) {
    return -5.0 * x / 3.0 + 61.0 * x * x * x / 30.0;
  }
  const double s = 1.0 / std::cosh(x);
  const double t = std::tanh(x);
  return (s * (s * s - t * t) * x - t * s) / (x * x);
}

struct ShootState {
  double u, v;  // u and u'
};

// One RK4 step of u'' = w(x) u with w = V + l(l+1)/x^2 - lambda.
template <typename W>
ShootState rk4_step(const W& w, double x, ShootState s, double h) {
  auto f = [&w](double xx, ShootState st) {
    return ShootState{st.v, w(xx) * st.u};
  };
  ShootState k1 = f(x, s);
  ShootState k2 = f(x + 0.5 * h, {s.u + 0.5 * h * k1.u, s.v + 0.5 * h * k1.v});
  ShootState k3 = f(x + 0.5 * h, {s.u + 0.5 * h * k2.u, s.v + 0.5 * h * k2.v});
  ShootState k4 = f(x + h, {s.u + h * k3.u, s.v + h * k3.v});
  return {s.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
          s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

struct Shot {
  ShootState at_match;
  std::vector<double> u;  // samples on the integration grid
};

constexpr double kMatchPoint = 1.0;
constexpr double kOriginCutoff = 1e-6;

}  // namespace

double BoundMode::phi(double x) const {
  if (grid.empty()) return 0.0;
  if (x <= grid.front()) x = grid.front();
  if (x >= grid.back()) {
    // exponential continuation beyond the solver window
    const double kappa = std::sqrt(std::max(-eigenvalue, 1e-12));
    return u.back() / grid.back() * std::exp(-kappa * (x - grid.back()));
  }
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const auto i = std::min(u.size() - 2,
                          static_cast<std::size_t>(it - grid.begin()) - 1);
  const double w = (x - grid[i]) / (grid[i + 1] - grid[i]);
  const double ui = (1.0 - w) * u[i] + w * u[i + 1];
  return ui / x;
}

double analytic_phi1_nondim(double x, double omega_d_hat) {
  return std::sqrt(3.0 / (8.0 * M_PI * omega_d_hat)) * shape(x);
}

double analytic_phi1_nondim_deriv(double x, double omega_d_hat) {
  return std::sqrt(3.0 / (8.0 * M_PI * omega_d_hat)) * shape_deriv(x);
}

double analytic_phi1(double x, const ModelParams& params) {
  if (!(params.m_d * params.ell > 1.0)) {
    throw std::invalid_argument("analytic_phi1: m_d*ell must exceed 1");
  }
  const double what = params.omega_d() * params.ell;
  // Phi_phys(r) = Phihat(r/ell)/ell restores 2 omega int |Phi|^2 d^3x = 1
  // with omega = omegahat/ell.
  return analytic_phi1_nondim(x, what) / params.ell;
}

double smearing_function(double t, double x, const ModelParams& params,
                         double T_switch) {
  if (!(T_switch > 0.0)) {
    throw std::invalid_argument("smearing_function: switching width must be positive");
  }
  return std::exp(-t * t / (2.0 * T_switch * T_switch)) * analytic_phi1(x, params);
}

namespace {

// Integrate from near the origin up to the match point; u ~ x^{l+1} there.
template <typename W>
Shot shoot_left(const W& w, int l, double h) {
  Shot shot;
  double x = kOriginCutoff;
  ShootState s{std::pow(x, l + 1), (l + 1) * std::pow(x, l)};
  shot.u.push_back(s.u);
  const int n = static_cast<int>(std::round((kMatchPoint - x) / h));
  const double hh = (kMatchPoint - x) / n;
  for (int i = 0; i < n; ++i) {
    s = rk4_step(w, x, s, hh);
    x += hh;
    shot.u.push_back(s.u);
    // renormalize to avoid overflow in stiff regions
    const double m = std::abs(s.u) + std::abs(s.v);
    if (m > 1e200) {
      for (auto& v : shot.u) v /= m;
      s.u /= m;
      s.v /= m;
    }
  }
  shot.at_match = s;
  return shot;
}

// Integrate from x_max down to the match point starting on the decaying branch.
template <typename W>
Shot shoot_right(const W& w, double lambda, double x_max, double h) {
  Shot shot;
  const double kappa = std::sqrt(std::max(-lambda, 1e-12));
  double x = x_max;
  ShootState s{1.0, -kappa};
  shot.u.push_back(s.u);
  const int n = static_cast<int>(std::round((x_max - kMatchPoint) / h));
  const double hh = -(x_max - kMatchPoint) / n;
  for (int i = 0; i < n; ++i) {
    s = rk4_step(w, x, s, hh);
    x += hh;
    shot.u.push_back(s.u);
    const double m = std::abs(s.u) + std::abs(s.v);
    if (m > 1e200) {
      for (auto& v : shot.u) v /= m;
      s.u /= m;
      s.v /= m;
    }
  }
  std::reverse(shot.u.begin(), shot.u.end());
  shot.at_match = s;
  return shot;
}

}  // namespace

std::vector<BoundMode> shoot_bound_states(const RealFn& potential, double mass,
                                          int l, double x_max, double tol,
                                          double step) {
  const double centrifugal = static_cast<double>(l) * (l + 1);
  auto w_of = [&](double lambda) {
    return [&potential, centrifugal, lambda](double x) {
      return potential(x) + centrifugal / (x * x) - lambda;
    };
  };

  // Wronskian-style matching function, bounded by normalization.
  auto match = [&](double lambda) {
    auto w = w_of(lambda);
    ShootState left = shoot_left(w, l, step).at_match;
    ShootState right = shoot_right(w, lambda, x_max, step).at_match;
    const double scale = std::abs(left.u * right.v) + std::abs(left.v * right.u) + 1e-300;
    return (left.v * right.u - right.v * left.u) / scale;
  };

  double v_min = 0.0;
  for (double x = kOriginCutoff; x <= x_max; x += 0.01) {
    v_min = std::min(v_min, potential(x) + centrifugal / (x * x));
  }

  std::vector<double> eigenvalues;
  const double scan_step = 0.05;
  double lo = v_min + 1e-9;
  double f_lo = match(lo);
  for (double hi = lo + scan_step; lo < -1e-9; hi = std::min(hi + scan_step, -1e-9)) {
    hi = std::min(hi, -1e-9);
    const double f_hi = match(hi);
    if (f_lo * f_hi < 0.0) {
      eigenvalues.push_back(bisect_root(match, lo, hi, tol));
    }
    lo = hi;
    f_lo = f_hi;
    if (hi >= -1e-9) break;
  }

  std::vector<BoundMode> modes;
  for (double lambda : eigenvalues) {
    if (lambda <= -mass * mass) {
      throw std::runtime_error(
          "shoot_bound_states: unstable mode (eigenvalue <= -m^2) out of scope");
    }
    auto w = w_of(lambda);
    Shot left = shoot_left(w, l, step);
    Shot right = shoot_right(w, lambda, x_max, step);

    BoundMode mode;
    mode.l = l;
    mode.eigenvalue = lambda;
    mode.omega = std::sqrt(mass * mass + lambda);

    // Stitch: scale the right branch so u is continuous at the match point.
    const double ratio = left.at_match.u / right.at_match.u;
    const std::size_t n_left = left.u.size();
    mode.u = left.u;
    for (std::size_t i = 1; i < right.u.size(); ++i) {
      mode.u.push_back(right.u[i] * ratio);
    }
    mode.grid.resize(mode.u.size());
    const double h_left = (kMatchPoint - kOriginCutoff) / (n_left - 1);
    for (std::size_t i = 0; i < n_left; ++i) mode.grid[i] = kOriginCutoff + h_left * i;
    const double h_right = (x_max - kMatchPoint) / (right.u.size() - 1);
    for (std::size_t i = 1; i < right.u.size(); ++i) {
      mode.grid[n_left - 1 + i] = kMatchPoint + h_right * i;
    }

    // Klein-Gordon normalization: 8 pi omega int u^2 dx = 1. Composite
    // Simpson per uniform segment (left and right of the match point).
    auto simpson = [](const std::vector<double>& g, const std::vector<double>& f,
                      std::size_t lo, std::size_t hi) {
      double acc = 0.0;
      std::size_t i = lo;
      for (; i + 2 <= hi; i += 2) {
        acc += (g[i + 2] - g[i]) / 6.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
      }
      if (i + 1 <= hi) acc += 0.5 * (f[i] + f[i + 1]) * (g[i + 1] - g[i]);
      return acc;
    };
    std::vector<double> usq(mode.u.size());
    for (std::size_t i = 0; i < mode.u.size(); ++i) usq[i] = mode.u[i] * mode.u[i];
    const double norm = simpson(mode.grid, usq, 0, n_left - 1) +
                        simpson(mode.grid, usq, n_left - 1, mode.u.size() - 1);
    const double scale = 1.0 / std::sqrt(8.0 * M_PI * mode.omega * norm);
    for (auto& v : mode.u) v *= scale;

    // Interior node count; ignore the tail below amplitude noise.
    double amp = 0.0;
    for (double v : mode.u) amp = std::max(amp, std::abs(v));
    int nodes = 0;
    double prev = 0.0;
    for (std::size_t i = 1; i + 1 < mode.u.size(); ++i) {
      const double v = mode.u[i];
      if (std::abs(v) < 1e-9 * amp) continue;
      if (prev != 0.0 && v * prev < 0.0) ++nodes;
      prev = v;
    }
    mode.nodes = nodes;
    modes.push_back(std::move(mode));
  }

  std::sort(modes.begin(), modes.end(),
            [](const BoundMode& a, const BoundMode& b) {
              return a.eigenvalue < b.eigenvalue;
            });
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (modes[k].nodes != static_cast<int>(k)) {
      throw std::runtime_error(
          "shoot_bound_states: node count inconsistent with ordering "
          "(suspected missed level near eigenvalue " +
          std::to_string(modes[k].eigenvalue) + ")");
    }
  }
  return modes;
}

}  // namespace udw
