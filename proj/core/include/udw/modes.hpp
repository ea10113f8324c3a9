#ifndef UDW_MODES_HPP
#define UDW_MODES_HPP

#include <vector>

#include "udw/profiles.hpp"
#include "udw/quadcore.hpp"

namespace udw {

/// A discrete eigenmode of L = -laplacian + V, Klein-Gordon normalized so
/// that 2 omega int |Phi|^2 d^3x = 1. All quantities nondimensional (x = r/ell,
/// eigenvalue in 1/ell^2; the physical mode is Phi(x)/ell).
struct BoundMode {
  int l = 0;
  double eigenvalue = 0.0;  // mu_n
  double omega = 0.0;       // sqrt(mass^2 + mu_n)
  int nodes = 0;
  std::vector<double> grid;  // ascending x
  std::vector<double> u;     // u(x) = x * Phi(x)

  /// Interpolated Phi(x); clamps below the first grid point.
  double phi(double x) const;
};

/// The Klein-Gordon normalized bound mode of -laplacian - (6/ell^2) sech^2,
/// Phi_1 = sqrt(3/(8 pi ell omega_d)) tanh(r/ell)/(r cosh(r/ell)), at x = r/ell.
/// Throws when m_d*ell <= 1 (no stable bound mode).
double analytic_phi1(double x, const ModelParams& params);

/// Nondimensional Phi_1 and its x-derivative (values of ell^{3/2} Phi_1).
double analytic_phi1_nondim(double x, double omega_d_hat);
double analytic_phi1_nondim_deriv(double x, double omega_d_hat);

/// All s-wave-style bound states of u'' = (V + l(l+1)/x^2 - lambda) u with
/// u(0) = 0, found by two-sided shooting with log-derivative matching at x=1.
/// The potential is nondimensional; eigenvalues are searched in (min V, 0).
std::vector<BoundMode> shoot_bound_states(const RealFn& potential, double mass,
                                          int l, double x_max = 25.0,
                                          double tol = 1e-8, double step = 1e-3);

/// Lambda(t, x) = exp(-t^2/(2 T^2)) Phi_1(x).
double smearing_function(double t, double x, const ModelParams& params,
                         double T_switch);

}  // namespace udw

#endif
