// Acceptance gate: ten fixed criteria, one PASS/FAIL line each, nonzero exit
// on any failure. Tolerances and runtime budgets are pinned.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "udw/fluid.hpp"
#include "udw/modes.hpp"
#include "udw/profiles.hpp"
#include "udw/quadcore.hpp"
#include "udw/response.hpp"
#include "udw/stress.hpp"
#include "udw/verify.hpp"

using namespace udw;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int index, const std::string& label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", index,
              label.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

RealFn sech_well(double alpha) {
  return [alpha](double x) {
    const double s = 1.0 / std::cosh(x);
    return alpha * s * s;
  };
}

void criterion_1() {
  Timer t;
  const double quad = integrate_tail(
      [](double x) {
        return source_G(x, ModelParams{}, DetectorState::ground());
      },
      0.0, 0.5).value;
  const double closed = g0_constant();
  const double elapsed = t.seconds();
  const bool ok = std::abs(quad - 1.53971) < 1e-4 &&
                  std::abs(closed - quad) < 1e-5 && elapsed < 1.0;
  report(1, "central-pressure constant g0 from two independent paths", ok,
         "quad=" + num(quad) + " closed=" + num(closed) + " t=" + num(elapsed) + "s");
}

void criterion_2() {
  Timer t;
  const auto ms = mu_star(0.0);
  const double closed = 1.0 / (1.0 + 0.5 * g0_constant());
  const double elapsed = t.seconds();
  const bool ok = std::abs(ms.value / 0.565017 - 1.0) < 1e-4 &&
                  std::abs(ms.value / closed - 1.0) < 1e-6 && elapsed < 5.0;
  report(2, "energy-condition threshold mu* at eta = 0, dual path", ok,
         "bisect=" + num(ms.value) + " closed=" + num(closed) + " t=" +
             num(elapsed) + "s");
}

void criterion_3() {
  Timer t;
  ModelParams p;
  const auto m6 = shoot_bound_states(sech_well(-6.0), p.m_d, 0);
  const auto m2 = shoot_bound_states(sech_well(-2.0), p.m_d, 0);
  const auto m12 = shoot_bound_states(sech_well(-12.0), p.m_d, 0);
  bool ok = m6.size() == 1 && m2.empty() && m12.size() == 1;
  double ev6 = 0.0, l2 = 1.0, ev12 = 0.0;
  if (ok) {
    ev6 = m6[0].eigenvalue;
    ev12 = m12[0].eigenvalue;
    double numr = 0.0, den = 0.0;
    for (double x = 0.05; x <= 12.0; x += 0.01) {
      const double a = analytic_phi1(x, p);
      const double b = m6[0].phi(x);
      numr += (a - b) * (a - b);
      den += a * a;
    }
    l2 = std::sqrt(numr / den);
    ok = std::abs(ev6 + 1.0) < 1e-6 && l2 < 1e-4 && std::abs(ev12 + 4.0) < 1e-6;
  }
  const double elapsed = t.seconds();
  ok = ok && elapsed < 10.0;
  report(3, "shooting solver reproduces the sech-well spectrum", ok,
         "ev6=" + num(ev6) + " l2=" + num(l2) + " ev12=" + num(ev12) + " t=" +
             num(elapsed) + "s");
}

void criterion_4() {
  ModelParams p;
  const double omega_d_hat = p.omega_d();
  const double norm = 8.0 * M_PI * omega_d_hat *
                      integrate_tail(
                          [&](double x) {
                            const double u = x * analytic_phi1_nondim(x, omega_d_hat);
                            return u * u;
                          },
                          0.0, 0.5)
                          .value;
  const bool ok = std::abs(norm - 1.0) < 1e-8;
  report(4, "Klein-Gordon normalization 2 omega int |Phi|^2 d^3x = 1", ok,
         "norm-1=" + num(norm - 1.0));
}

void criterion_5() {
  const auto grid = default_grid(12.0, 2401);
  bool ok = true;
  std::string detail;
  for (int eta = 0; eta <= 1; ++eta) {
    ModelParams p;
    p.eta = eta;
    for (const auto& state : {DetectorState::ground(), DetectorState::excited()}) {
      const auto T = assemble_total(p, state, solve_fluid(p, state, grid));
      const double sup = conservation_residual(T).sup;
      const double tol = state.kind == DetectorState::Kind::Excited ? 1e-5 : 1e-6;
      ok = ok && sup < tol;
      detail += to_string(state).substr(0, 1) + std::to_string(eta) + "=" +
                num(sup) + " ";
    }
  }
  report(5, "covariant conservation of the assembled total tensor", ok, detail);
}

void criterion_6() {
  const auto grid = default_grid();
  bool ok = true;
  double worst_fluid = 1e300, worst_total = 1e300, w_lo = 1e300, w_hi = -1e300;
  for (int eta = 0; eta <= 1; ++eta) {
    ModelParams p;
    p.eta = eta;
    const auto sol = solve_fluid(p, DetectorState::ground(), grid);
    const auto m = energy_condition_margins(sol.density, sol.pressure);
    worst_fluid = std::min({worst_fluid, m.rho_plus_P, m.rho_plus_3P, m.rho_minus_absP});
    for (double w : sol.w) {
      w_lo = std::min(w_lo, w);
      w_hi = std::max(w_hi, w);
    }
    const auto T = assemble_total(p, DetectorState::ground(), sol);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double rho = T.rhoE[i], R = T.R[i], P = T.Pperp[i];
      worst_total = std::min({worst_total, rho, rho + R, rho + P,
                              rho + R + 2.0 * P, rho - std::abs(R),
                              rho - std::abs(P)});
    }
  }
  ok = worst_fluid > 0.0 && worst_total > 0.0 && w_lo > 0.0 && w_hi < 1.0 / 3.0;
  report(6, "energy conditions and 0 < w < 1/3 at the default coupling", ok,
         "fluid=" + num(worst_fluid) + " total=" + num(worst_total) + " w in [" +
             num(w_lo) + "," + num(w_hi) + "]");
}

void criterion_7() {
  ModelParams p;
  const auto grid = default_grid(12.0, 2401);
  const auto fluid = solve_fluid(p, DetectorState::ground(), grid);
  const auto assembled = landau_decompose(assemble_total(p, DetectorState::ground(), fluid));
  const auto printed = landau_decompose(printed_components(p, fluid));
  double dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = 1.0 / std::cosh(grid[i]);
    const double th = std::tanh(grid[i]);
    const double target = 4.0 / 3.0 * s * s * th * th;
    dev = std::max(dev, std::abs(assembled.Pi[i] - target));
    dev = std::max(dev, std::abs(printed.Pi[i] - target));
  }
  report(7, "pressure deviator Pi = (4/3) sech^2 tanh^2 from both paths", dev < 1e-8,
         "sup-dev=" + num(dev));
}

void criterion_8() {
  const auto grid = default_grid();
  double sup = 0.0;
  for (int excited = 0; excited <= 1; ++excited) {
    for (int eta = 0; eta <= 1; ++eta) {
      ModelParams p;
      p.eta = eta;
      const auto state = excited ? DetectorState::excited() : DetectorState::ground();
      const auto pq = pressure_quadrature(p, state, grid);
      const auto po = pressure_ode(p, state, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] > 10.0) break;
        sup = std::max(sup, std::abs(pq[i] - po[i]) / std::abs(pq[i]));
      }
    }
  }
  report(8, "quadrature and backward-ODE pressure agree for all four cases",
         sup < 1e-6, "sup-rel=" + num(sup));
}

void criterion_9() {
  auto unit = [](double) { return 1.0; };
  double oracle = 0.0;
  for (double gT : {-5.0, -2.0, 0.0, 1.0, 2.0}) {
    const double numv = excitation_probability_reduction(gT, 1.0, 1.0, unit);
    oracle = std::max(oracle, std::abs(numv / pointlike_probability(gT, 1.0) - 1.0));
  }
  const double zero_gap = std::abs(pointlike_probability(0.0, 1.0) - 0.25 / M_PI);
  const double asym =
      std::abs(pointlike_probability(-5.0, 1.0) * 2.0 * std::sqrt(M_PI) / 5.0 - 1.0);
  ModelParams p;
  const double f0_closed = std::sqrt(3.0 / (8.0 * M_PI * p.omega_d())) * 4.0 *
                           M_PI * (M_PI / 2.0);
  const double f0 = std::abs(form_factor(0.0, p) / f0_closed - 1.0);
  const bool ok = oracle < 1e-6 && zero_gap < 1e-8 && asym < 1e-2 && f0 < 1e-8;
  report(9, "detector response oracles (pointlike and zero-momentum limits)", ok,
         "unit-F=" + num(oracle) + " zero-gap=" + num(zero_gap) + " asym=" +
             num(asym) + " F0=" + num(f0));
}

void criterion_10() {
  Timer t;
  const auto rep = run_verify(false);
  const double elapsed = t.seconds();
  const std::vector<std::string> expected = {
      "printed-pressure-ode-sign",
      "printed-components-nonconservation",
      "printed-g-closed-form-factor",
      "printed-p1-prefactor",
  };
  bool ok = rep.exit_code() == 0 &&
            rep.count(VerifyCheck::Status::Flagged) == 4 && elapsed < 60.0;
  for (const auto& name : expected) {
    bool found = false;
    for (const auto& c : rep.checks) {
      if (c.name == name && c.status == VerifyCheck::Status::Flagged) found = true;
    }
    ok = ok && found;
  }
  report(10, "verify audit flags the four documented formula discrepancies", ok,
         "fail=" + std::to_string(rep.count(VerifyCheck::Status::Fail)) +
             " flagged=" + std::to_string(rep.count(VerifyCheck::Status::Flagged)) +
             " t=" + num(elapsed) + "s");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
