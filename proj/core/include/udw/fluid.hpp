#ifndef UDW_FLUID_HPP
#define UDW_FLUID_HPP

#include <stdexcept>
#include <vector>

#include "udw/profiles.hpp"

namespace udw {

class FluidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pressure and energy density of the localizing fluid on a radial grid.
/// All profile values are nondimensional: x = r/ell, pressure = ell^4 P,
/// density = ell^4 rho. The fluid four-velocity is the static frame u = d/dt.
struct FluidSolution {
  ModelParams params;
  DetectorState state;
  std::vector<double> grid;
  std::vector<double> pressure;
  std::vector<double> density;
  std::vector<double> w;  // P/rho
};

/// Uniform grid on [1e-3, x_max].
std::vector<double> default_grid(double x_max = 12.0, int points = 600);

/// Nondimensional pressure source. Ground: G = 4 sech^2 tanh^2 / x.
/// Excited: adds alpha * ghat * sech^2 * tanh with ghat = ell^2 g(x), the
/// source consistent with the pressure equation under the ansatz
/// P = Q/(1 - mu_hat sech^2), Q' = -G_tot.
double source_G(double x, const ModelParams& params, const DetectorState& state);

/// P(x) = [1/(1 - mu_hat sech^2 x)] int_x^inf G, vanishing at infinity.
std::vector<double> pressure_quadrature(const ModelParams& params,
                                        const DetectorState& state,
                                        const std::vector<double>& grid);

/// Pointwise evaluation of the quadrature pressure at one radius.
double pressure_quadrature_at(double x, const ModelParams& params,
                              const DetectorState& state);

/// Backward RK4 integration of the pressure equation from P(30) = 0.
std::vector<double> pressure_ode(const ModelParams& params,
                                 const DetectorState& state,
                                 const std::vector<double>& grid);

/// rho = 3 eta P - ell^4 L_fluid for the state's on-shell Lagrangian.
std::vector<double> density(const ModelParams& params, const DetectorState& state,
                            const std::vector<double>& grid,
                            const std::vector<double>& pressure);

FluidSolution solve_fluid(const ModelParams& params, const DetectorState& state,
                          const std::vector<double>& grid);

struct EnergyConditionMargins {
  double rho_plus_P;
  double rho_plus_3P;
  double rho_minus_absP;
};

EnergyConditionMargins energy_condition_margins(const std::vector<double>& density,
                                                const std::vector<double>& pressure);

std::vector<double> eos_w(const std::vector<double>& density,
                          const std::vector<double>& pressure);

struct MuStar {
  double value;        // units length^2
  bool unconstrained;  // eta > 1/3: the energy conditions impose no bound
};

/// Threshold below which rho - |P| > 0 everywhere; root of
/// (3 eta - 1) P(0; mu) + 2/mu by bisection. Equals
/// ell^2 / (1 + (1 - 3 eta) g0 / 2) in closed form.
MuStar mu_star(double eta, double ell = 1.0);

}  // namespace udw

#endif
