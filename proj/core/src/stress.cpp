#include "udw/stress.hpp"

#include <cmath>
#include <stdexcept>

#include "udw/modes.hpp"
#include "udw/quadcore.hpp"

namespace udw {

namespace {

struct Triple {
  double rho, R, Pperp;
};

// Confining-field tensor in the static orthonormal frame, nondimensional.
// psi_c = e^{-i w t} sech(x)/ell, V_c = -|psi_c|^4.
Triple psi_c_piece(double x, double m_c_hat) {
  const double s = 1.0 / std::cosh(x);
  const double t = std::tanh(x);
  const double psi = s;           // ell * Psi_c
  const double dpsi = -s * t;     // its x-derivative
  const double w2 = m_c_hat * m_c_hat - 1.0;  // (ell omega_c)^2
  const double vc = -psi * psi * psi * psi;
  Triple out;
  out.rho = w2 * psi * psi + dpsi * dpsi + m_c_hat * m_c_hat * psi * psi + vc;
  out.R = dpsi * dpsi + (w2 - m_c_hat * m_c_hat) * psi * psi - vc;
  out.Pperp = -dpsi * dpsi + (w2 - m_c_hat * m_c_hat) * psi * psi - vc;
  return out;
}

// Normal-ordered detector-field tensor in the first excited state, built from
// the mode u1 = e^{-i w1 t} Phi_1: 2Re(du* du) - g_{mu nu}(du* du + m^2 |u|^2).
Triple phi_d_piece(double x, double m_d_hat, double omega_d_hat) {
  const double phi = analytic_phi1_nondim(x, omega_d_hat);
  const double dphi = analytic_phi1_nondim_deriv(x, omega_d_hat);
  const double w2 = omega_d_hat * omega_d_hat;
  const double m2 = m_d_hat * m_d_hat;
  Triple out;
  out.rho = w2 * phi * phi + dphi * dphi + m2 * phi * phi;
  out.R = dphi * dphi + (w2 - m2) * phi * phi;
  out.Pperp = -dphi * dphi + (w2 - m2) * phi * phi;
  return out;
}

// Detector-confinement coupling: -1/2 g_{mu nu} alpha |psi_c|^2 g(x).
Triple phi_d_psi_c_piece(double x, double alpha, double omega_d_hat) {
  const double s = 1.0 / std::cosh(x);
  const double phi = analytic_phi1_nondim(x, omega_d_hat);
  const double g = 2.0 * phi * phi;
  const double half = 0.5 * alpha * s * s * g;
  return {half, -half, -half};
}

void push(StressComponents::PieceSet& set, const Triple& t) {
  set.rhoE.push_back(t.rho);
  set.R.push_back(t.R);
  set.Pperp.push_back(t.Pperp);
}

}  // namespace

StressComponents assemble_total(const ModelParams& params, const DetectorState& state,
                                const FluidSolution& fluid_solution) {
  if (!(fluid_solution.state == state) &&
      state.kind != DetectorState::Kind::Mixture) {
    throw std::invalid_argument(
        "assemble_total: fluid solution was computed for state '" +
        to_string(fluid_solution.state) + "', requested '" + to_string(state) + "'");
  }
  if (state.kind == DetectorState::Kind::Mixture) {
    // Mixtures are convex combinations of the two pure-state tensors.
    auto ground_fluid = solve_fluid(params, DetectorState::ground(), fluid_solution.grid);
    auto excited_fluid = solve_fluid(params, DetectorState::excited(), fluid_solution.grid);
    auto t0 = assemble_total(params, DetectorState::ground(), ground_fluid);
    auto t1 = assemble_total(params, DetectorState::excited(), excited_fluid);
    auto mixed = mixture_tensor(t0, t1, 1.0, state.mixture_p);
    mixed.state = state;
    return mixed;
  }

  const bool excited = state.kind == DetectorState::Kind::Excited;
  const double m_c_hat = params.m_c * params.ell;
  const double m_d_hat = params.m_d * params.ell;
  const double omega_d_hat = excited ? params.omega_d() * params.ell : 0.0;
  const double mu_hat = params.mu_hat();

  StressComponents out;
  out.params = params;
  out.state = state;
  out.grid = fluid_solution.grid;
  out.pieces.present = true;

  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    const double x = out.grid[i];
    const double s = 1.0 / std::cosh(x);
    const Triple psi = psi_c_piece(x, m_c_hat);
    const Triple fluid{fluid_solution.density[i], fluid_solution.pressure[i],
                       fluid_solution.pressure[i]};
    const double coupling_factor = -mu_hat * s * s;
    const Triple psi_fluid{coupling_factor * fluid.rho, coupling_factor * fluid.R,
                           coupling_factor * fluid.Pperp};
    Triple quantum{0.0, 0.0, 0.0};
    Triple coupling{0.0, 0.0, 0.0};
    if (excited) {
      quantum = phi_d_piece(x, m_d_hat, omega_d_hat);
      coupling = phi_d_psi_c_piece(x, params.alpha, omega_d_hat);
    }
    push(out.pieces.psi_c, psi);
    push(out.pieces.fluid, fluid);
    push(out.pieces.psi_c_fluid, psi_fluid);
    push(out.pieces.phi_d, quantum);
    push(out.pieces.phi_d_psi_c, coupling);
    out.rhoE.push_back(psi.rho + fluid.rho + psi_fluid.rho + quantum.rho + coupling.rho);
    out.R.push_back(psi.R + fluid.R + psi_fluid.R + quantum.R + coupling.R);
    out.Pperp.push_back(psi.Pperp + fluid.Pperp + psi_fluid.Pperp + quantum.Pperp +
                        coupling.Pperp);
  }
  return out;
}

StressComponents printed_components(const ModelParams& params,
                                    const FluidSolution& fluid_solution) {
  if (fluid_solution.state.kind != DetectorState::Kind::Ground) {
    throw std::invalid_argument("printed_components: ground state only");
  }
  const double m_c_hat = params.m_c * params.ell;
  const double mu_hat = params.mu_hat();
  StressComponents out;
  out.params = params;
  out.state = fluid_solution.state;
  out.grid = fluid_solution.grid;
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    const double s = 1.0 / std::cosh(out.grid[i]);
    const double s2 = s * s;
    const double pref = 1.0 - mu_hat * s2;
    out.rhoE.push_back(2.0 * m_c_hat * m_c_hat * s2 + pref * fluid_solution.density[i]);
    out.R.push_back(-2.0 * s2 * s2 + pref * fluid_solution.pressure[i]);
    out.Pperp.push_back(-2.0 * s2 + pref * fluid_solution.pressure[i]);
  }
  return out;
}

LandauDecomposition landau_decompose(const StressComponents& components) {
  LandauDecomposition out;
  const std::size_t n = components.grid.size();
  out.p.resize(n);
  out.Pi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.p[i] = (components.R[i] + 2.0 * components.Pperp[i]) / 3.0;
    out.Pi[i] = 2.0 / 3.0 * (components.R[i] - components.Pperp[i]);
  }
  return out;
}

ConservationResidual conservation_residual(const StressComponents& components) {
  const auto& g = components.grid;
  const auto& R = components.R;
  const auto& P = components.Pperp;
  if (g.size() < 9) {
    throw std::invalid_argument("conservation_residual: grid too small");
  }
  const double h = g[1] - g[0];
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (std::abs(g[i] - g[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw std::invalid_argument("conservation_residual: grid must be uniform");
    }
  }
  if (h > 0.05) {
    throw std::invalid_argument(
        "conservation_residual: grid too coarse (spacing > 0.05); the "
        "finite-difference error would exceed the residual budget");
  }

  auto residual_at = [&](std::size_t i, std::size_t stride) {
    const double hh = h * stride;
    const double dR = (-R[i + 2 * stride] + 8.0 * R[i + stride] - 8.0 * R[i - stride] +
                       R[i - 2 * stride]) /
                      (12.0 * hh);
    return dR + 2.0 / g[i] * (R[i] - P[i]);
  };

  ConservationResidual out;
  for (std::size_t i = 2; i + 2 < g.size(); ++i) {
    if (g[i] < 0.05 || g[i] > 10.0) continue;
    const double r1 = residual_at(i, 1);
    out.x.push_back(g[i]);
    out.residual.push_back(r1);
    out.sup = std::max(out.sup, std::abs(r1));
    if (i >= 4 && i + 4 < g.size()) {
      const double r2 = residual_at(i, 2);
      out.fd_error_estimate = std::max(out.fd_error_estimate, std::abs(r1 - r2) / 15.0);
    }
  }
  return out;
}

NaiveDemo naive_nonconservation(const ModelParams& params) {
  const double omega_d_hat = params.omega_d() * params.ell;
  const double m_d_hat = params.m_d * params.ell;
  const double alpha = params.alpha;

  // Naive tensor of the prescribed-potential model with <:phi^2:> = g(x),
  // radial component in the static frame.
  auto radial = [&](double x) {
    const double s = 1.0 / std::cosh(x);
    const double phi = analytic_phi1_nondim(x, omega_d_hat);
    const double dphi = analytic_phi1_nondim_deriv(x, omega_d_hat);
    const double w2 = omega_d_hat * omega_d_hat;
    const double g = 2.0 * phi * phi;
    return dphi * dphi + (w2 - m_d_hat * m_d_hat) * phi * phi -
           0.5 * alpha * s * s * g;
  };
  auto anisotropy = [&](double x) {  // R - Pperp
    const double dphi = analytic_phi1_nondim_deriv(x, omega_d_hat);
    return 2.0 * dphi * dphi;
  };
  auto source = [&](double x) {  // -1/2 g(x) dV/dx with V = alpha sech^2
    const double s = 1.0 / std::cosh(x);
    const double t = std::tanh(x);
    const double phi = analytic_phi1_nondim(x, omega_d_hat);
    return 2.0 * alpha * phi * phi * s * s * t;
  };

  NaiveDemo out;
  for (double x : default_grid()) {
    const double div = derivative(radial, x, 1, 1e-4) + 2.0 / x * anisotropy(x);
    const double src = source(x);
    out.x.push_back(x);
    out.divergence.push_back(div);
    out.source.push_back(src);
    out.difference.push_back(div - src);
    out.sup_difference = std::max(out.sup_difference, std::abs(div - src));
    out.peak_divergence = std::max(out.peak_divergence, std::abs(div));
  }
  return out;
}

StressComponents mixture_tensor(const StressComponents& T0, const StressComponents& T1,
                                double lambda_coupling, double L) {
  if (T0.grid != T1.grid) {
    throw std::invalid_argument("mixture_tensor: tensors must share a grid");
  }
  const double w1 = lambda_coupling * lambda_coupling * L;
  if (!(w1 >= 0.0 && w1 <= 1.0)) {
    throw std::invalid_argument(
        "mixture_tensor: lambda^2 L outside [0,1], perturbative validity violated");
  }
  const double w0 = 1.0 - w1;
  StressComponents out;
  out.params = T0.params;
  out.state = DetectorState::mixture(w1);
  out.grid = T0.grid;
  const std::size_t n = T0.grid.size();
  out.rhoE.resize(n);
  out.R.resize(n);
  out.Pperp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rhoE[i] = w0 * T0.rhoE[i] + w1 * T1.rhoE[i];
    out.R[i] = w0 * T0.R[i] + w1 * T1.R[i];
    out.Pperp[i] = w0 * T0.Pperp[i] + w1 * T1.Pperp[i];
  }
  return out;
}

}  // namespace udw
