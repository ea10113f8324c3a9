#ifndef UDW_PROFILES_HPP
#define UDW_PROFILES_HPP

#include <stdexcept>
#include <string>

namespace udw {

/// Parameter tuple defining a detector instance. Lengths are in arbitrary
/// units; masses in inverse length; mu carries units of length squared.
struct ModelParams {
  double ell = 1.0;    // localization scale
  double mu = 0.2;     // fluid coupling, length^2
  double eta = 0.0;    // fluid Lagrangian choice: L = -rho + 3*eta*P
  double alpha = -6.0; // detector-confinement coupling, dimensionless
  double m_c = 2.0;    // confining field mass, 1/length
  double m_d = 5.0;    // detector field mass, 1/length

  double mu_hat() const { return mu / (ell * ell); }
  double omega_c() const;  // sqrt(m_c^2 - 1/ell^2)
  double omega_d() const;  // sqrt(m_d^2 - 1/ell^2)

  /// Throws std::invalid_argument when the instance has no stable,
  /// finite-pressure solution (mu outside (0, ell^2), or m*ell <= 1).
  void validate() const;
};

/// Stationary sech-profile state of the confining field.
struct ConfiningField {
  double ell;
  double omega_c;   // 1/length
  double lambda_c;  // localization eigenvalue, 1/ell

  /// Psi_c(x) = sech(x)/ell, x = r/ell.
  double envelope(double x) const;
};

ConfiningField confining_field(const ModelParams& params);

/// Detector state entering the fluid and stress sectors.
struct DetectorState {
  enum class Kind { Ground, Excited, Mixture };
  Kind kind = Kind::Ground;
  double mixture_p = 0.0;  // only meaningful for Mixture

  static DetectorState ground() { return {Kind::Ground, 0.0}; }
  static DetectorState excited() { return {Kind::Excited, 0.0}; }
  static DetectorState mixture(double p);

  bool operator==(const DetectorState&) const = default;
};

std::string to_string(const DetectorState& state);

/// tanh(x)/x with the small-x series 1 - x^2/3 + 2x^4/15.
double tanh_over_x(double x);

/// V(r) = alpha sech^2(x)/ell^2, x = r/ell.
double trap_potential(double x, const ModelParams& params);

/// f(x) = -(2/ell^2) sech^2(x) - (2/ell^2) tanh(x)/x.
double f_profile(double x, const ModelParams& params);

/// F_c = dV_c/d|psi_c|^2 = -2 sech^2(x)/ell^2 for V_c = -|psi_c|^4.
double F_c_profile(double x, const ModelParams& params);

/// On-shell fluid Lagrangian for the given detector state, units 1/ell^4.
/// Ground: -(2/(mu ell^2)) tanh(x)/x. Excited adds -(alpha/(2 mu)) g(x).
double fluid_onshell_lagrangian(double x, const ModelParams& params,
                                const DetectorState& state);

/// g(x) = <1|:phi_d^2:|1> = 2 Phi_1(x)^2, units 1/length^2.
double g_excited(double x, const ModelParams& params);

}  // namespace udw

#endif
