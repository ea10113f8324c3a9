#include <cmath>
#include <doctest.h>

#include "udw/modes.hpp"
#include "udw/quadcore.hpp"
#include "udw/response.hpp"

using namespace udw;

namespace {

// F(k) = F(0) sech(pi k ell / 2); F(0) = 2 pi^2 ell^2 sqrt(3 ell / (8 pi omega_d)).
double closed_form_factor(double k, const ModelParams& p) {
  const double f0 = 2.0 * M_PI * M_PI * p.ell * p.ell *
                    std::sqrt(3.0 / (8.0 * M_PI * p.ell * p.omega_d()));
  return f0 / std::cosh(0.5 * M_PI * k * p.ell);
}

}  // namespace

TEST_SUITE("response") {

TEST_CASE("pointlike closed form") {
  CHECK(pointlike_probability(0.0, 1.0) ==
        doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-12));
  CHECK(pointlike_probability(1.0, 1.0) ==
        doctest::Approx(0.00708827223263642).epsilon(1e-12));
  CHECK(pointlike_probability(-5.0, 1.0) ==
        doctest::Approx(1.41047395886941).epsilon(1e-12));
  // deep negative gap: L -> |Omega| T / (2 sqrt(pi))
  CHECK(pointlike_probability(-5.0, 1.0) ==
        doctest::Approx(5.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-2));
  CHECK(pointlike_probability(-10.0, 1.0) ==
        doctest::Approx(10.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-3));
  CHECK_THROWS_AS(pointlike_probability(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("momentum reduction reproduces the pointlike detector when F = 1") {
  auto unit = [](double) { return 1.0; };
  for (double gT : {-5.0, -2.0, 0.0, 1.0, 2.0}) {
    const double T = 1.0;
    CHECK(excitation_probability_reduction(gT / T, T, 1.0, unit) ==
          doctest::Approx(pointlike_probability(gT / T, T)).epsilon(1e-6));
  }
}

TEST_CASE("form factor") {
  ModelParams p;
  // zero-momentum limit matches the direct volume integral
  const double f0 = closed_form_factor(0.0, p);
  CHECK(form_factor(0.0, p) == doctest::Approx(f0).epsilon(1e-8));
  // sech profile
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(form_factor(k, p) == doctest::Approx(closed_form_factor(k, p)).epsilon(1e-6));
  }
  // seamless across the small-k branch
  CHECK(form_factor(0.99e-4, p) == doctest::Approx(form_factor(1.01e-4, p)).epsilon(1e-6));
  CHECK_THROWS_AS(form_factor(-1.0, p), std::invalid_argument);

  // scale dependence: the width in k is set by 1/ell
  ModelParams wide;
  wide.ell = 2.0;
  wide.m_c = 1.0;
  wide.m_d = 2.5;
  CHECK(form_factor(1.0, wide) ==
        doctest::Approx(closed_form_factor(1.0, wide)).epsilon(1e-6));
}

TEST_CASE("finite-size probability against the exact form factor") {
  ModelParams p;
  auto exact = [&p](double k) { return closed_form_factor(k, p); };
  for (double gap : {-2.0, -1.0, 1.0}) {
    const double T = 1.5;
    const double tabulated = excitation_probability(gap, T, p).L;
    const double reference = excitation_probability_reduction(gap, T, p.ell, exact);
    CHECK(tabulated == doctest::Approx(reference).epsilon(1e-6));
  }

  // invariant under widening the truncation window
  auto decayed = [&p](double k) { return k < 60.0 ? closed_form_factor(k, p) : 0.0; };
  const double narrow = excitation_probability_reduction(-1.0, 1.0, 1.0, decayed, 30.0);
  const double wide = excitation_probability_reduction(-1.0, 1.0, 1.0, decayed, 60.0);
  CHECK(narrow == doctest::Approx(wide).epsilon(1e-8));

  // monotone in the gap at fixed switching time
  const double lm = excitation_probability(-1.0, 1.0, p).L;
  const double l0 = excitation_probability(0.0, 1.0, p).L;
  const double lp = excitation_probability(1.0, 1.0, p).L;
  CHECK(lm > l0);
  CHECK(l0 > lp);
  CHECK(lp > 0.0);

  ModelParams bad;
  bad.m_d = 0.5;
  CHECK_THROWS_AS(excitation_probability(1.0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("pointlike limit of a small detector") {
  // ell << T and ell << 1/|Omega|: the form factor is flat over the Gaussian
  // window and L/F(0)^2 approaches the pointlike value
  ModelParams p;
  p.ell = 0.05;
  p.m_c = 2.0 / p.ell;
  p.m_d = 25.0;
  const double gap = -1.0, T = 5.0;
  const double f0 = form_factor(0.0, p);
  const double l = excitation_probability(gap, T, p).L;
  CHECK(l / (f0 * f0) ==
        doctest::Approx(pointlike_probability(gap, T)).epsilon(0.05));
}

TEST_CASE("response curve") {
  const std::vector<double> gapT = {-2.0, -1.0, 1.0, 2.0};
  const auto table = response_curve({1.0}, gapT, 5.0);
  REQUIRE(table.L.size() == 1);
  REQUIRE(table.L[0].size() == gapT.size());
  REQUIRE(table.pointlike.size() == gapT.size());
  for (std::size_t i = 0; i < gapT.size(); ++i) {
    CHECK(table.L[0][i] >= 0.0);
    const double sign = gapT[i] > 0 ? 1.0 : -1.0;
    CHECK(table.pointlike[i] ==
          doctest::Approx(pointlike_probability(sign, std::abs(gapT[i]))).epsilon(1e-12));
  }
  // de-excitation dominates excitation at equal |gap| T
  CHECK(table.L[0][0] > table.L[0][3]);

  // matches the single-point evaluator
  ModelParams p;
  const double omega_d = p.omega_d();
  CHECK(table.L[0][2] ==
        doctest::Approx(excitation_probability(omega_d, 1.0 / omega_d, p).L)
            .epsilon(1e-6));

  CHECK_THROWS_AS(response_curve({1.0}, {0.0, 1.0}, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(response_curve({0.1}, {1.0}, 5.0), std::invalid_argument);
}

TEST_CASE("final state weights") {
  const auto [w0, w1] = final_state(0.5, 0.4);
  CHECK(w1 == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(w0 + w1 == doctest::Approx(1.0).epsilon(1e-14));
  const auto [g0w, g1w] = final_state(0.0, 123.0);
  CHECK(g0w == doctest::Approx(1.0));
  CHECK(g1w == doctest::Approx(0.0));
  CHECK_THROWS_AS(final_state(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(final_state(2.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(final_state(1.0, -0.1), std::invalid_argument);
}

}  // TEST_SUITE
