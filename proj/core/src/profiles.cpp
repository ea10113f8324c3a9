#include "udw/profiles.hpp"

#include <cmath>

namespace udw {

double ModelParams::omega_c() const {
  return std::sqrt(m_c * m_c - 1.0 / (ell * ell));
}

double ModelParams::omega_d() const {
  return std::sqrt(m_d * m_d - 1.0 / (ell * ell));
}

void ModelParams::validate() const {
  if (!(ell > 0.0)) throw std::invalid_argument("ModelParams: ell must be positive");
  if (!(mu > 0.0)) {
    throw std::invalid_argument("ModelParams: mu must be positive (density asymptote)");
  }
  if (!(mu < ell * ell)) {
    throw std::invalid_argument("ModelParams: mu must be below ell^2 (pressure divergence)");
  }
  if (!(m_c * ell > 1.0)) {
    throw std::invalid_argument("ModelParams: m_c*ell must exceed 1 (real omega_c)");
  }
  if (!(m_d * ell > 1.0)) {
    throw std::invalid_argument("ModelParams: m_d*ell must exceed 1 (real omega_d)");
  }
}

ConfiningField confining_field(const ModelParams& params) {
  ConfiningField f;
  f.ell = params.ell;
  f.lambda_c = 1.0 / params.ell;
  f.omega_c = params.omega_c();
  return f;
}

double ConfiningField::envelope(double x) const {
  return 1.0 / (ell * std::cosh(x));
}

DetectorState DetectorState::mixture(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("DetectorState: mixture probability must lie in [0,1]");
  }
  return {Kind::Mixture, p};
}

std::string to_string(const DetectorState& state) {
  switch (state.kind) {
    case DetectorState::Kind::Ground: return "ground";
    case DetectorState::Kind::Excited: return "excited";
    case DetectorState::Kind::Mixture:
      return "mixture:" + std::to_string(state.mixture_p);
  }
  return "?";
}

double tanh_over_x(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
  }
  return std::tanh(x) / x;
}

namespace {

// (tanh(x) sech(x) / x)^2 with its small-x series.
double mode_shape_sq(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    const double s = 1.0 - 5.0 * x2 / 6.0 + 61.0 * x2 * x2 / 120.0;
    return s * s;
  }
  const double t = std::tanh(x) / (x * std::cosh(x));
  return t * t;
}

}  // namespace

double trap_potential(double x, const ModelParams& params) {
  const double s = 1.0 / std::cosh(x);
  return params.alpha * s * s / (params.ell * params.ell);
}

double f_profile(double x, const ModelParams& params) {
  const double s = 1.0 / std::cosh(x);
  const double inv_ell2 = 1.0 / (params.ell * params.ell);
  return -2.0 * inv_ell2 * s * s - 2.0 * inv_ell2 * tanh_over_x(x);
}

double F_c_profile(double x, const ModelParams& params) {
  const double s = 1.0 / std::cosh(x);
  return -2.0 * s * s / (params.ell * params.ell);
}

double g_excited(double x, const ModelParams& params) {
  const double omega_d = params.omega_d();
  if (!(params.m_d * params.ell > 1.0)) {
    throw std::invalid_argument("g_excited: m_d*ell must exceed 1");
  }
  const double ell = params.ell;
  return 3.0 / (4.0 * M_PI * ell * ell * ell * omega_d) * mode_shape_sq(x);
}

double fluid_onshell_lagrangian(double x, const ModelParams& params,
                                const DetectorState& state) {
  if (state.kind == DetectorState::Kind::Mixture) {
    throw std::invalid_argument(
        "fluid_onshell_lagrangian: mixtures are combined at the tensor level");
  }
  const double ell2 = params.ell * params.ell;
  double value = -2.0 / (params.mu * ell2) * tanh_over_x(x);
  if (state.kind == DetectorState::Kind::Excited) {
    value -= params.alpha / (2.0 * params.mu) * g_excited(x, params);
  }
  return value;
}

}  // namespace udw
