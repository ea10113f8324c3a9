#include <cmath>
#include <doctest.h>

#include "udw/modes.hpp"
#include "udw/quadcore.hpp"

using namespace udw;

namespace {

RealFn sech_well(double alpha) {
  return [alpha](double x) {
    const double s = 1.0 / std::cosh(x);
    return alpha * s * s;
  };
}

double radial_laplacian(const RealFn& f, double x) {
  return derivative(f, x, 2, 1e-4) + 2.0 / x * derivative(f, x, 1, 1e-4);
}

double rel_l2_distance(const BoundMode& mode, const ModelParams& params) {
  double num = 0.0, den = 0.0;
  for (double x = 0.05; x <= 12.0; x += 0.01) {
    const double a = analytic_phi1(x, params);
    const double b = mode.phi(x);
    num += (a - b) * (a - b);
    den += a * a;
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_SUITE("modes") {

TEST_CASE("analytic bound mode") {
  ModelParams p;
  const double omega_d = std::sqrt(24.0);
  CHECK(analytic_phi1(1e-7, p) ==
        doctest::Approx(std::sqrt(3.0 / (8.0 * M_PI * omega_d))).epsilon(1e-10));

  // eigen-residual under the alpha = -6 well
  auto phi = [&](double x) { return analytic_phi1(x, p); };
  double sup = 0.0;
  for (double x = 0.01; x <= 12.0; x += 0.05) {
    const double s2 = 1.0 / (std::cosh(x) * std::cosh(x));
    sup = std::max(sup, std::abs(-radial_laplacian(phi, x) - 6.0 * s2 * phi(x) +
                                 phi(x)));
  }
  CHECK(sup < 1e-6);

  // Klein-Gordon normalization by quadrature (radial integral is 1/3)
  const double norm = 8.0 * M_PI * omega_d *
                      integrate_tail(
                          [&](double x) {
                            const double u = x * phi(x);
                            return u * u;
                          },
                          0.0, 0.5)
                          .value;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));

  ModelParams bad;
  bad.m_d = 0.5;
  CHECK_THROWS_AS(analytic_phi1(1.0, bad), std::invalid_argument);
}

TEST_CASE("shooting solver finds the sech-well spectrum") {
  ModelParams p;
  const auto modes = shoot_bound_states(sech_well(-6.0), p.m_d, 0);
  REQUIRE(modes.size() == 1);
  CHECK(modes[0].eigenvalue == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(modes[0].omega == doctest::Approx(std::sqrt(24.0)).epsilon(1e-6));
  CHECK(modes[0].nodes == 0);
  CHECK(rel_l2_distance(modes[0], p) < 1e-4);

  // stored profile is Klein-Gordon normalized
  double norm = 0.0;
  for (std::size_t i = 1; i < modes[0].grid.size(); ++i) {
    norm += 0.5 * (modes[0].u[i] * modes[0].u[i] +
                   modes[0].u[i - 1] * modes[0].u[i - 1]) *
            (modes[0].grid[i] - modes[0].grid[i - 1]);
  }
  CHECK(8.0 * M_PI * modes[0].omega * norm == doctest::Approx(1.0).epsilon(1e-5));

  CHECK(shoot_bound_states(sech_well(-2.0), p.m_d, 0).empty());

  const auto deep = shoot_bound_states(sech_well(-12.0), p.m_d, 0);
  REQUIRE(deep.size() == 1);
  CHECK(deep[0].eigenvalue == doctest::Approx(-4.0).epsilon(1e-6));
}

TEST_CASE("two-level well and node counts") {
  // alpha = -30 (lambda = 5): odd levels at -(5-1)^2 and -(5-3)^2
  const auto modes = shoot_bound_states(sech_well(-30.0), 6.0, 0);
  REQUIRE(modes.size() == 2);
  CHECK(modes[0].eigenvalue == doctest::Approx(-16.0).epsilon(1e-6));
  CHECK(modes[1].eigenvalue == doctest::Approx(-4.0).epsilon(1e-6));
  CHECK(modes[0].nodes == 0);
  CHECK(modes[1].nodes == 1);
}

TEST_CASE("eigenvalues invariant under solver controls") {
  const auto base = shoot_bound_states(sech_well(-6.0), 5.0, 0);
  const auto wide = shoot_bound_states(sech_well(-6.0), 5.0, 0, 35.0);
  const auto fine = shoot_bound_states(sech_well(-6.0), 5.0, 0, 25.0, 1e-8, 5e-4);
  REQUIRE(base.size() == 1);
  REQUIRE(wide.size() == 1);
  REQUIRE(fine.size() == 1);
  CHECK(base[0].eigenvalue == doctest::Approx(wide[0].eigenvalue).epsilon(1e-7));
  CHECK(base[0].eigenvalue == doctest::Approx(fine[0].eigenvalue).epsilon(1e-7));

  // normalization invariant under regridding
  double norm = 0.0;
  for (std::size_t i = 1; i < fine[0].grid.size(); ++i) {
    norm += 0.5 * (fine[0].u[i] * fine[0].u[i] +
                   fine[0].u[i - 1] * fine[0].u[i - 1]) *
            (fine[0].grid[i] - fine[0].grid[i - 1]);
  }
  CHECK(8.0 * M_PI * fine[0].omega * norm == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("unstable modes are rejected") {
  CHECK_THROWS_WITH_AS(shoot_bound_states(sech_well(-6.0), 0.5, 0),
                       doctest::Contains("unstable mode"), std::runtime_error);
}

TEST_CASE("interpolated profile") {
  ModelParams p;
  const auto modes = shoot_bound_states(sech_well(-6.0), p.m_d, 0);
  REQUIRE(modes.size() == 1);
  const auto& m = modes[0];
  const std::size_t i = m.grid.size() / 3;
  CHECK(m.phi(m.grid[i]) == doctest::Approx(m.u[i] / m.grid[i]).epsilon(1e-12));
  // decaying continuation beyond the solver window
  CHECK(std::abs(m.phi(m.grid.back() + 5.0)) < std::abs(m.phi(m.grid.back())));
}

TEST_CASE("smearing function") {
  ModelParams p;
  const double T = 0.7;
  CHECK(smearing_function(0.0, 1.0, p, T) ==
        doctest::Approx(analytic_phi1(1.0, p)).epsilon(1e-14));
  CHECK(smearing_function(T, 1.0, p, T) ==
        doctest::Approx(std::exp(-0.5) * analytic_phi1(1.0, p)).epsilon(1e-13));
  CHECK(smearing_function(-T, 1.0, p, T) ==
        doctest::Approx(smearing_function(T, 1.0, p, T)).epsilon(1e-14));
  // time integral of the switching factor alone is sqrt(2 pi) T
  const double integral =
      integrate([&](double t) { return std::exp(-t * t / (2.0 * T * T)); },
                -10.0 * T, 10.0 * T)
          .value;
  CHECK(integral == doctest::Approx(std::sqrt(2.0 * M_PI) * T).epsilon(1e-10));
  CHECK_THROWS_AS(smearing_function(0.0, 1.0, p, -1.0), std::invalid_argument);
}

}  // TEST_SUITE
