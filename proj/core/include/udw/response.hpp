#ifndef UDW_RESPONSE_HPP
#define UDW_RESPONSE_HPP

#include <vector>

#include "udw/profiles.hpp"
#include "udw/quadcore.hpp"

namespace udw {

struct SwitchingParams {
  double T = 1.0;               // Gaussian switching width
  double lambda_coupling = 1.0; // dimensionless coupling
  double gap = 0.0;             // Omega; positive = excitation of the bound mode
};

struct ResponseResult {
  double L = 0.0;  // excitation probability density in lambda^2
  double gap = 0.0;
  double T = 0.0;
  double ell = 0.0;
};

/// Spatial Fourier transform of the bound mode,
/// F(k) = (4 pi / k) int_0^inf r sin(kr) Phi_1(r) dr, with the k -> 0 limit.
double form_factor(double k, const ModelParams& params);

/// L = (T^2 / 2 pi) int_0^inf dk k exp(-T^2 (Omega + k)^2) |F(k)|^2,
/// the exact momentum-space reduction of the double spacetime integral for a
/// Gaussian switching and the Phi_1 smearing.
ResponseResult excitation_probability(double gap, double T, const ModelParams& params);

/// Same reduction with a caller-supplied form factor (oracle hook). k_cut
/// optionally truncates the window where the form factor is known to vanish.
double excitation_probability_reduction(double gap, double T, double ell,
                                        const RealFn& form_factor_fn,
                                        double k_cut = 1e300);

/// Closed form of the reduction with F == 1 (pointlike detector).
double pointlike_probability(double gap, double T);

struct ResponseTable {
  std::vector<double> gapT;                // signed Omega*T samples
  std::vector<double> ells;                // one column per ell
  std::vector<std::vector<double>> L;      // L[col][row]
  std::vector<double> pointlike;           // closed-form reference column
};

/// L sampled over the gapT grid for each ell: T = |gapT|/omega_d(ell),
/// Omega = sign(gapT) * omega_d(ell). Requires gapT != 0 and m_d*ell > 1.
ResponseTable response_curve(const std::vector<double>& ell_values,
                             const std::vector<double>& gapT_grid, double m_d);

/// Mixture weights (1 - lambda^2 L, lambda^2 L); throws when lambda^2 L >= 1.
std::pair<double, double> final_state(double lambda_coupling, double L);

}  // namespace udw

#endif
