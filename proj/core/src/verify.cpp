#include "udw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "udw/fluid.hpp"
#include "udw/modes.hpp"
#include "udw/profiles.hpp"
#include "udw/quadcore.hpp"
#include "udw/response.hpp"
#include "udw/stress.hpp"

namespace udw {

int VerifyReport::count(VerifyCheck::Status s) const {
  int n = 0;
  for (const auto& c : checks) {
    if (c.status == s) ++n;
  }
  return n;
}

int VerifyReport::exit_code() const {
  return count(VerifyCheck::Status::Fail) > 0 ? 1 : 0;
}

std::string to_string(VerifyCheck::Status status) {
  switch (status) {
    case VerifyCheck::Status::Pass: return "pass";
    case VerifyCheck::Status::Fail: return "fail";
    case VerifyCheck::Status::Flagged: return "flagged";
  }
  return "?";
}

namespace {

class Suite {
 public:
  explicit Suite(bool strict) : strict_(strict) {}

  /// Pass iff |residual| <= tolerance.
  void add(const std::string& name, double residual, double tolerance,
           const std::string& note) {
    VerifyCheck c{name,
                  std::abs(residual) <= tolerance ? VerifyCheck::Status::Pass
                                                  : VerifyCheck::Status::Fail,
                  residual, tolerance, note};
    checks_.push_back(std::move(c));
  }

  /// Pass iff violation == 0 (sign/positivity checks).
  void add_positivity(const std::string& name, double violation,
                      const std::string& note) {
    add(name, violation, 0.0, note);
  }

  /// Documented discrepancy: "supported" must hold (else the audit itself is
  /// broken and the check fails); otherwise flagged, or failed in strict mode.
  void add_flagged(const std::string& name, double residual, double tolerance,
                   bool supported, const std::string& note) {
    VerifyCheck c{name, VerifyCheck::Status::Flagged, residual, tolerance, note};
    if (!supported || strict_) c.status = VerifyCheck::Status::Fail;
    if (!supported) c.note += " [audit oracle mismatch]";
    checks_.push_back(std::move(c));
  }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  bool strict_;
  std::vector<VerifyCheck> checks_;
};

std::vector<double> audit_grid() {
  std::vector<double> g;
  for (double x = 0.01; x <= 12.0; x += 0.06) g.push_back(x);
  return g;
}

double radial_laplacian(const RealFn& f, double x) {
  return derivative(f, x, 2, 1e-4) + 2.0 / x * derivative(f, x, 1, 1e-4);
}

// int_x^30 of the nondimensional pressure source at near machine precision,
// for the substitution audits.
double q_integral(double x, const ModelParams& params, const DetectorState& state) {
  auto g = [&](double xx) { return source_G(xx, params, state); };
  return integrate(g, x, 30.0, 1e-13, 1e-15).value;
}

void constants_checks(Suite& s) {
  const double g0 = g0_constant();
  const double quad = integrate_tail(
      [](double x) {
        return source_G(x, ModelParams{}, DetectorState::ground());
      },
      0.0, 0.5).value;
  s.add("g0-closed-form-vs-quadrature", g0 - quad, 1e-5,
        "zeta-derivative closed form against the direct integral of G");
  s.add("g0-reference-value", g0 - 1.53971, 1e-4,
        "central-pressure constant g0");
}

void profile_checks(Suite& s) {
  ModelParams params;  // ell=1, mu=0.2, eta=0, alpha=-6, m_c=2, m_d=5

  s.add("confining-frequency", params.omega_c() - std::sqrt(3.0), 1e-12,
        "omega_c = sqrt(m_c^2 - 1/ell^2) at m_c = 2/ell");

  double eom_c = 0.0, eom_d = 0.0, ident_g = 0.0, ident_e = 0.0, fc_fd = 0.0;
  auto psi = [](double x) { return 1.0 / std::cosh(x); };
  const double omega_d_hat = params.omega_d();
  auto phi = [&](double x) { return analytic_phi1_nondim(x, omega_d_hat); };
  auto vc = [&psi](double x) {
    const double p2 = psi(x) * psi(x);
    return -p2 * p2;
  };
  for (double x : audit_grid()) {
    const double s2 = psi(x) * psi(x);
    eom_c = std::max(eom_c, std::abs(-radial_laplacian(psi, x) +
                                     f_profile(x, params) * psi(x) + psi(x)));
    eom_d = std::max(eom_d, std::abs(-radial_laplacian(phi, x) -
                                     6.0 * s2 * phi(x) + phi(x)));
    const double ground = params.mu *
                              fluid_onshell_lagrangian(x, params, DetectorState::ground()) +
                          F_c_profile(x, params) - f_profile(x, params);
    const double excited =
        params.mu * fluid_onshell_lagrangian(x, params, DetectorState::excited()) +
        0.5 * params.alpha * g_excited(x, params) + F_c_profile(x, params) -
        f_profile(x, params);
    ident_g = std::max(ident_g, std::abs(ground));
    ident_e = std::max(ident_e, std::abs(excited));
    // F_c = dV_c/d|psi|^2, chain rule against d/dx
    const double dvc = derivative(vc, x, 1, 1e-4);
    const double ds2 = -2.0 * s2 * std::tanh(x);
    fc_fd = std::max(fc_fd, std::abs(dvc / ds2 - F_c_profile(x, params)));
  }
  s.add("confining-eigenvalue-residual", eom_c, 1e-6,
        "(-lap + f) psi_c = -(1/ell^2) psi_c by finite differences");
  s.add("detector-eigenvalue-residual", eom_d, 1e-6,
        "(-lap - 6 sech^2) Phi_1 = -(1/ell^2) Phi_1 by finite differences");
  s.add("lagrangian-consistency-ground", ident_g, 1e-10,
        "mu L_fluid + (alpha/2) g + F_c - f = 0, ground state");
  s.add("lagrangian-consistency-excited", ident_e, 1e-10,
        "mu L_fluid + (alpha/2) g + F_c - f = 0, excited state");
  s.add("potential-derivative-F_c", fc_fd, 1e-8,
        "F_c equals dV_c/d|psi_c|^2 computed by finite differences");
}

void mode_checks(Suite& s) {
  ModelParams params;
  auto well = [](double alpha) {
    return [alpha](double x) {
      const double sech = 1.0 / std::cosh(x);
      return alpha * sech * sech;
    };
  };
  const auto modes6 = shoot_bound_states(well(-6.0), params.m_d, 0);
  s.add("shooting-mode-count-alpha-6", static_cast<double>(modes6.size()) - 1.0,
        0.0, "exactly one s-wave bound state of -6 sech^2");
  if (modes6.size() == 1) {
    s.add("shooting-eigenvalue-alpha-6", modes6[0].eigenvalue + 1.0, 1e-6,
          "odd Poschl-Teller level of the lambda = 2 well");
    // relative L2 distance to the analytic mode
    double num = 0.0, den = 0.0;
    for (double x = 0.05; x <= 12.0; x += 0.01) {
      const double a = analytic_phi1(x, params);
      const double b = modes6[0].phi(x);
      num += (a - b) * (a - b);
      den += a * a;
    }
    s.add("shooting-profile-l2", std::sqrt(num / den), 1e-4,
          "shot profile against the analytic Phi_1");
    // Klein-Gordon norm 2 omega int |Phi|^2 d^3x = 8 pi omega int u^2 dx
    const double omega_d_hat = params.omega_d();
    const double norm =
        8.0 * M_PI * omega_d_hat *
        integrate_tail(
            [&](double x) {
              const double u = x * analytic_phi1_nondim(x, omega_d_hat);
              return u * u;
            },
            0.0, 0.5)
            .value;
    s.add("kg-normalization", norm - 1.0, 1e-8,
          "2 omega int |Phi|^2 d^3x = 1 for the analytic mode, by quadrature");
    // and the shot mode, trapezoid on its stored grid
    const auto& m = modes6[0];
    double tnorm = 0.0;
    for (std::size_t i = 1; i < m.grid.size(); ++i) {
      tnorm += 0.5 * (m.u[i] * m.u[i] + m.u[i - 1] * m.u[i - 1]) *
               (m.grid[i] - m.grid[i - 1]);
    }
    s.add("kg-normalization-shot-mode", 8.0 * M_PI * m.omega * tnorm - 1.0, 1e-5,
          "stored-grid trapezoid re-check of the shot mode's normalization");
  }
  const auto modes2 = shoot_bound_states(well(-2.0), params.m_d, 0);
  s.add("shooting-mode-count-alpha-2", static_cast<double>(modes2.size()), 0.0,
        "-2 sech^2 has no odd bound state, so no s-wave mode");
  const auto modes12 = shoot_bound_states(well(-12.0), params.m_d, 0);
  double ev12 = modes12.empty() ? 1e30 : modes12[0].eigenvalue;
  s.add("shooting-eigenvalue-alpha-12", ev12 + 4.0, 1e-6,
        "odd Poschl-Teller level of the lambda = 3 well");
}

void fluid_checks(Suite& s) {
  const auto grid = default_grid();
  const double g0 = g0_constant();

  // dual-path pressure for all four (state, eta) combinations
  double dual = 0.0;
  for (int excited = 0; excited <= 1; ++excited) {
    for (int eta = 0; eta <= 1; ++eta) {
      ModelParams params;
      params.eta = eta;
      const auto state = excited ? DetectorState::excited() : DetectorState::ground();
      const auto pq = pressure_quadrature(params, state, grid);
      const auto po = pressure_ode(params, state, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] > 10.0) break;  // below the tail-truncation floor
        dual = std::max(dual, std::abs(pq[i] - po[i]) / std::abs(pq[i]));
      }
    }
  }
  s.add("pressure-dual-path", dual, 1e-6,
        "quadrature vs backward-ODE pressure, all (state, eta) combinations");

  // substitution of the quadrature solution into the pressure equation
  // (1 - mu psi^2) P' - mu (psi^2)' P + (f - (alpha/2) g - F_c)(psi^2)' = 0
  double subst = 0.0;
  for (int excited = 0; excited <= 1; ++excited) {
    ModelParams params;
    const auto state = excited ? DetectorState::excited() : DetectorState::ground();
    const double mu_hat = params.mu_hat();
    auto pfn = [&](double x) {
      const double sech = 1.0 / std::cosh(x);
      return q_integral(x, params, state) / (1.0 - mu_hat * sech * sech);
    };
    for (double x : audit_grid()) {
      const double sech = 1.0 / std::cosh(x);
      const double s2 = sech * sech;
      const double ds2 = -2.0 * s2 * std::tanh(x);
      const double g = excited ? g_excited(x, params) : 0.0;
      const double r = (1.0 - params.mu * s2) * derivative(pfn, x, 1, 5e-3) -
                       params.mu * ds2 * pfn(x) +
                       (f_profile(x, params) - 0.5 * params.alpha * g -
                        F_c_profile(x, params)) * ds2;
      subst = std::max(subst, std::abs(r));
    }
  }
  s.add("pressure-equation-residual", subst, 1e-8,
        "delivered pressure substituted into the equation of motion");

  // closed-form central values
  ModelParams params;
  const double p0 = pressure_quadrature_at(1e-6, params, DetectorState::ground());
  s.add("central-pressure-closed-form", p0 / (g0 / (1.0 - params.mu_hat())) - 1.0,
        1e-8, "P(0) = g0 / (ell^2 (ell^2 - mu)), about 1.92464 at mu = ell^2/5");
  s.add("central-density-eta0", 2.0 / params.mu_hat() - 10.0, 1e-12,
        "rho(0) = 2/mu_hat = 10 at eta = 0, mu = ell^2/5");
  s.add("central-density-eta1", (3.0 * p0 + 10.0) - 15.7739, 1e-3,
        "rho(0) = 3 P(0) + 10 at eta = 1, about 15.7739");

  // energy conditions and equation of state for eta in {0, 1}
  for (int eta = 0; eta <= 1; ++eta) {
    ModelParams p;
    p.eta = eta;
    const auto sol = solve_fluid(p, DetectorState::ground(), grid);
    const auto m = energy_condition_margins(sol.density, sol.pressure);
    const double viol = std::min(0.0, std::min(m.rho_plus_P,
                                 std::min(m.rho_plus_3P, m.rho_minus_absP)));
    s.add_positivity("fluid-energy-conditions-eta" + std::to_string(eta), viol,
                     "min margins of rho+P, rho+3P, rho-|P| all positive");
    double wviol = 0.0;
    for (double w : sol.w) {
      wviol = std::max(wviol, std::max(0.0, w - 1.0 / 3.0));
      wviol = std::max(wviol, std::max(0.0, -w));
    }
    s.add_positivity("eos-w-range-eta" + std::to_string(eta), -wviol,
                     "0 < w < 1/3 everywhere");
  }

  // mu_star: dual path, reference value, threshold consistency
  const double closed = 1.0 / (1.0 + 0.5 * g0);
  const auto ms = mu_star(0.0);
  s.add("mu-star-dual-path", ms.value / closed - 1.0, 1e-6,
        "bisection on the margin against the closed form");
  s.add("mu-star-reference", ms.value - 0.565017, 1e-4,
        "threshold mu* at eta = 0");
  double below, above;
  {
    ModelParams p;
    p.mu = ms.value - 0.02;
    auto sol = solve_fluid(p, DetectorState::ground(), grid);
    below = energy_condition_margins(sol.density, sol.pressure).rho_minus_absP;
    p.mu = ms.value + 0.02;
    sol = solve_fluid(p, DetectorState::ground(), grid);
    above = energy_condition_margins(sol.density, sol.pressure).rho_minus_absP;
  }
  s.add_positivity("mu-star-threshold-consistency",
                   std::min(0.0, below) + std::max(0.0, above),
                   "margin positive just below mu*, negative just above");
  {
    // the closed-form threshold assumes rho - |P| binds at the origin
    ModelParams p;
    p.mu = ms.value - 0.01;
    const auto sol = solve_fluid(p, DetectorState::ground(), grid);
    std::size_t argmin = 0;
    double best = 1e300;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double v = sol.density[i] - std::abs(sol.pressure[i]);
      if (v < best) {
        best = v;
        argmin = i;
      }
    }
    s.add("binding-margin-at-origin", static_cast<double>(argmin), 0.0,
          "near the threshold, the minimum of rho - |P| sits at the first "
          "grid point");
  }
}

void stress_checks(Suite& s, bool /*strict*/) {
  const auto fine = default_grid(12.0, 2401);

  // end-to-end conservation of the assembled tensor, all four combinations
  for (int excited = 0; excited <= 1; ++excited) {
    for (int eta = 0; eta <= 1; ++eta) {
      ModelParams params;
      params.eta = eta;
      const auto state = excited ? DetectorState::excited() : DetectorState::ground();
      const auto fluid = solve_fluid(params, state, fine);
      const auto tensor = assemble_total(params, state, fluid);
      const auto res = conservation_residual(tensor);
      const double tol = excited ? 1e-5 : 1e-6;
      s.add("conservation-" + to_string(state) + "-eta" + std::to_string(eta),
            res.sup, tol, "sup |dR/dx + (2/x)(R - P)| over x in [0.05, 10]");
    }
  }

  ModelParams params;
  const auto fluid = solve_fluid(params, DetectorState::ground(), fine);
  const auto tensor = assemble_total(params, DetectorState::ground(), fluid);
  const auto printed = printed_components(params, fluid);

  // pressure deviator from both paths; Landau reconstruction
  const auto lt = landau_decompose(tensor);
  const auto lp = landau_decompose(printed);
  double dev = 0.0, rec = 0.0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const double sech = 1.0 / std::cosh(fine[i]);
    const double t = std::tanh(fine[i]);
    const double target = 4.0 / 3.0 * sech * sech * t * t;
    dev = std::max(dev, std::abs(lt.Pi[i] - target));
    dev = std::max(dev, std::abs(lp.Pi[i] - target));
    rec = std::max(rec, std::abs(tensor.R[i] - (lt.p[i] + lt.Pi[i])));
    rec = std::max(rec, std::abs(tensor.Pperp[i] - (lt.p[i] - 0.5 * lt.Pi[i])));
  }
  s.add("pressure-deviator-identity", dev, 1e-8,
        "Pi = (4/3) sech^2 tanh^2 from assembled and printed components");
  s.add("landau-reconstruction", rec, 1e-12,
        "R = p + Pi and Pperp = p - Pi/2 exactly");

  // anisotropic energy conditions of the total ground-state tensor
  for (int eta = 0; eta <= 1; ++eta) {
    ModelParams p;
    p.eta = eta;
    const auto f = solve_fluid(p, DetectorState::ground(), fine);
    const auto tt = assemble_total(p, DetectorState::ground(), f);
    double viol = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const double rho = tt.rhoE[i], R = tt.R[i], P = tt.Pperp[i];
      const double margins[] = {rho,       rho + R,           rho + P,
                                rho + R + 2.0 * P, rho - std::abs(R),
                                rho - std::abs(P)};
      for (double m : margins) viol = std::min(viol, m);
    }
    s.add_positivity("total-energy-conditions-eta" + std::to_string(eta), viol,
                     "rho, rho+R, rho+P, rho+R+2P, rho-|R|, rho-|P| all >= 0");
  }

  // mixture linearity
  {
    const auto f1 = solve_fluid(params, DetectorState::excited(), fine);
    const auto t1 = assemble_total(params, DetectorState::excited(), f1);
    const auto mixed = mixture_tensor(tensor, t1, 1.0, 0.3);
    double lin = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      lin = std::max(lin, std::abs(mixed.rhoE[i] -
                                   (0.7 * tensor.rhoE[i] + 0.3 * t1.rhoE[i])));
    }
    s.add("mixture-linearity", lin, 1e-12,
          "mixture tensor is the stated convex combination");
  }

  // naive prescribed-potential model: divergence equals the on-shell source
  const auto demo = naive_nonconservation(params);
  s.add("naive-divergence-source-identity", demo.sup_difference, 1e-6,
        "div T of the naive tensor equals -1/2 g(x) dV/dx on shell");
  s.add_positivity("naive-nonconservation-nonzero",
                   std::min(0.0, demo.peak_divergence - 1e-3),
                   "the naive divergence is genuinely nonzero");

  // printed ground-state component formulas: origin value sanity
  const double rho0_origin =
      2.0 * 4.0 + (1.0 - params.mu_hat()) * (2.0 / params.mu_hat());
  s.add("printed-rho0-origin", rho0_origin - 16.0, 1e-12,
        "printed rho_0(0) = 2 m_c^2 + (1 - mu_hat) rho(0) = 16 at defaults");

  // --- documented discrepancies (flagged) ---

  // (a) printed pressure-ODE right-hand-side sign
  {
    const double mu_hat = params.mu_hat();
    auto pfn = [&](double x) {
      const double sech = 1.0 / std::cosh(x);
      return q_integral(x, params, DetectorState::ground()) /
             (1.0 - mu_hat * sech * sech);
    };
    double printed_res = 0.0, corrected_res = 0.0;
    for (double x = 0.2; x <= 4.0; x += 0.2) {
      const double sech = 1.0 / std::cosh(x);
      const double t = std::tanh(x);
      const double denom = std::cosh(x) * std::cosh(x) - params.mu;
      const double lhs = derivative(pfn, x, 1, 5e-3) +
                         2.0 * params.mu * t * pfn(x) / denom;
      const double rhs = 4.0 * t * t / (x * denom);
      printed_res = std::max(printed_res, std::abs(lhs - rhs));
      corrected_res = std::max(corrected_res, std::abs(lhs + rhs));
    }
    s.add_flagged("printed-pressure-ode-sign", printed_res, 0.0,
                  corrected_res < 1e-7,
                  "the printed scalar pressure equation has its right-hand "
                  "side with sign opposite to the one solved by the quoted "
                  "quadrature solution; flipping the sign closes the residual");
  }

  // (b) printed rho_0/R_0/P_0 are not conserved; residual = 8 sech^4 tanh
  {
    const auto pres = conservation_residual(printed);
    double mismatch = 0.0;
    for (std::size_t i = 0; i < pres.x.size(); ++i) {
      const double sech = 1.0 / std::cosh(pres.x[i]);
      const double target = 8.0 * std::pow(sech, 4) * std::tanh(pres.x[i]);
      mismatch = std::max(mismatch, std::abs(pres.residual[i] - target));
    }
    s.add_flagged("printed-components-nonconservation", pres.sup, 0.0,
                  mismatch < 1e-6,
                  "the printed ground-state components violate the radial "
                  "conservation identity with residual exactly 8 sech^4 tanh, "
                  "consistent with the potential V_c entering with flipped "
                  "sign; the assembled tensor conserves");
  }

  // (c) the printed g(x) closed form is half the mode-algebra value
  {
    double ratio_dev = 0.0;
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
      const double sinh2x = std::sinh(2.0 * x);
      const double printed_g = 6.0 * std::pow(std::sinh(x), 6) /
                               (std::pow(sinh2x, 4) * M_PI * x * x *
                                params.omega_d());
      ratio_dev = std::max(ratio_dev,
                           std::abs(printed_g / g_excited(x, params) - 0.5));
    }
    s.add_flagged("printed-g-closed-form-factor", 0.5, 0.0, ratio_dev < 1e-10,
                  "the printed closed form for g(x) equals |Phi_1|^2, half of "
                  "the mode-algebra value 2|Phi_1|^2 demanded by the stated "
                  "definition; the factor-2 value is what conservation uses "
                  "consistently");
  }

  // (d) printed excited-pressure prefactor loses a 1/ell^2 (visible at ell != 1)
  {
    ModelParams p2;
    p2.ell = 2.0;
    p2.m_c = 1.0;  // 2/ell
    p2.m_d = 2.5;  // 5/ell
    p2.mu = 0.8;   // ell^2/5
    const double x = 1.0;
    const double q = q_integral(x, p2, DetectorState::ground());
    const double sech = 1.0 / std::cosh(x);
    const double ell2 = p2.ell * p2.ell;
    const double denom = ell2 - p2.mu * sech * sech;
    const double printed_p1 = q / denom;             // printed prefactor
    const double correct_p = q / (ell2 * denom);     // quoted solution form
    s.add_flagged("printed-p1-prefactor", printed_p1 / correct_p - 1.0, 0.0,
                  std::abs(printed_p1 / correct_p - ell2) < 1e-10,
                  "the printed excited-state pressure prefactor "
                  "1/(ell^2 - mu sech^2) differs from the solution's "
                  "1/(ell^2(ell^2 - mu sech^2)) by ell^2; indistinguishable "
                  "at ell = 1, exposed at ell = 2");
  }
}

void response_checks(Suite& s) {
  ModelParams params;

  double oracle = 0.0;
  auto unit_ff = [](double) { return 1.0; };
  for (double gT : {-5.0, -2.0, 0.0, 1.0, 2.0}) {
    const double num = excitation_probability_reduction(gT, 1.0, 1.0, unit_ff);
    const double ref = pointlike_probability(gT, 1.0);
    oracle = std::max(oracle, std::abs(num / ref - 1.0));
  }
  s.add("response-pointlike-oracle", oracle, 1e-6,
        "numerical reduction with F = 1 against the Gaussian-moment closed form");

  s.add("response-zero-gap-value", pointlike_probability(0.0, 1.0) - 0.25 / M_PI,
        1e-8, "pointlike value 1/(4 pi) at zero gap");
  s.add("response-asymptote",
        pointlike_probability(-5.0, 1.0) * 2.0 * std::sqrt(M_PI) / 5.0 - 1.0,
        1e-2, "pointlike ratio to |Omega| T / (2 sqrt(pi)) at |Omega| T = 5");

  const double f0 = form_factor(0.0, params);
  const double f0_closed = std::sqrt(3.0 / (8.0 * M_PI * params.omega_d())) *
                           4.0 * M_PI * (M_PI / 2.0);
  s.add("form-factor-zero-limit", f0 / f0_closed - 1.0, 1e-8,
        "F(0) against the integration-by-parts value (pi/2 integral)");
  double closed_dev = 0.0;
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    const double ref = f0_closed / std::cosh(M_PI * k / 2.0);
    closed_dev = std::max(closed_dev,
                          std::abs(form_factor(k, params) / ref - 1.0));
  }
  s.add("form-factor-closed-form", closed_dev, 1e-6,
        "F(k) = F(0) sech(pi k ell / 2) for the sech-well mode");
  s.add("form-factor-continuity",
        form_factor(1e-4, params) / f0 - 1.0, 1e-6,
        "quadrature at k = 1e-4 against the k = 0 limit");
}

}  // namespace

VerifyReport run_verify(bool strict_paper) {
  Suite suite(strict_paper);
  constants_checks(suite);
  profile_checks(suite);
  mode_checks(suite);
  fluid_checks(suite);
  stress_checks(suite, strict_paper);
  response_checks(suite);
  VerifyReport report;
  report.strict_paper = strict_paper;
  report.checks = suite.take();
  return report;
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["strict_paper"] = report.strict_paper;
  j["summary"] = {{"pass", report.count(VerifyCheck::Status::Pass)},
                  {"fail", report.count(VerifyCheck::Status::Fail)},
                  {"flagged", report.count(VerifyCheck::Status::Flagged)}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"status", to_string(c.status)},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"note", c.note}});
  }
  return j.dump(2) + "\n";
}

}  // namespace udw
