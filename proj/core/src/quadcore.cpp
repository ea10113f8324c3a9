#include "udw/quadcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace udw {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNodes[i]);
    fv[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fv[7] = f(c);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 7; ++i) {
    kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron += kKronrodWeights[7] * fv[7];
  gauss += kGaussWeights[3] * fv[7];
  kron *= h;
  gauss *= h;
  const double err = std::max(std::abs(kron - gauss), 2e-16 * std::abs(kron));
  return {kron, err};
}

struct Interval {
  double a, b, value, error;
  int depth;
};

}  // namespace

QuadResult integrate(const RealFn& f, double a, double b, double rel_tol, double abs_tol) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  constexpr int kMaxDepth = 50;
  constexpr std::size_t kMaxIntervals = 100000;

  PanelResult whole = gk15(f, a, b);
  std::vector<Interval> work{{a, b, whole.value, whole.error, 0}};
  std::vector<Interval> done;

  while (!work.empty()) {
    // Split the interval with the largest error estimate.
    auto worst = std::max_element(work.begin(), work.end(),
                                  [](const Interval& u, const Interval& v) {
                                    return u.error < v.error;
                                  });
    double total = 0.0, total_err = 0.0;
    for (const auto& iv : work) { total += iv.value; total_err += iv.error; }
    for (const auto& iv : done) { total += iv.value; total_err += iv.error; }
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (total_err <= tol) {
      return {total, total_err};
    }
    if (done.size() + work.size() > kMaxIntervals) {
      throw QuadratureError("integrate: interval budget exhausted", total, total_err);
    }
    Interval iv = *worst;
    work.erase(worst);
    if (iv.depth >= kMaxDepth) {
      throw QuadratureError("integrate: maximum subdivision depth reached",
                            total, total_err);
    }
    const double m = 0.5 * (iv.a + iv.b);
    PanelResult left = gk15(f, iv.a, m);
    PanelResult right = gk15(f, m, iv.b);
    work.push_back({iv.a, m, left.value, left.error, iv.depth + 1});
    work.push_back({m, iv.b, right.value, right.error, iv.depth + 1});
  }
  return {0.0, 0.0};  // unreachable: work starts nonempty
}

QuadResult integrate_tail(const RealFn& f, double a, double decay_scale, double rel_tol) {
  if (!(decay_scale > 0.0)) {
    throw std::invalid_argument("integrate_tail: decay_scale must be positive");
  }
  const double r_inf = std::max(a + 8.0 * decay_scale, 40.0 * std::max(decay_scale, 1.0));

  // Decay check: the integrand two scales before the cutoff must dominate the
  // value at the cutoff by roughly e^2 (3x slack for overstated scales).
  const double f_end = std::abs(f(r_inf));
  const double f_ref = std::abs(f(r_inf - 2.0 * decay_scale));
  if (f_end > 1e-280 && f_end > 3.0 * f_ref * std::exp(-2.0)) {
    throw QuadratureError("integrate_tail: integrand does not decay at the stated scale",
                          0.0, f_end);
  }
  QuadResult body = integrate(f, a, r_inf, rel_tol, 1e-14);
  const double tail_bound = f_end * decay_scale;
  return {body.value, body.abs_error_estimate + tail_bound};
}

double derivative(const RealFn& f, double x, int order, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("derivative: step must be positive");
  const double h = step;
  const double f1 = f(x + h), fm1 = f(x - h);
  const double f2 = f(x + 2 * h), fm2 = f(x - 2 * h);
  if (order == 1) {
    return (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
  }
  if (order == 2) {
    const double f0 = f(x);
    return (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  }
  throw std::invalid_argument("derivative: order must be 1 or 2");
}

double bisect_root(const RealFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_root: requires lo < hi");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::runtime_error("bisect_root: no sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

constexpr double kBernoulli2j[6] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                                    -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

// Euler-Maclaurin tail of zeta(s) and zeta'(s) for s > 1, N summation terms.
void zeta_em(double s, int n_terms, double* z, double* zp) {
  const double n = static_cast<double>(n_terms);
  double sum = 0.0, dsum = 0.0;
  for (int k = 1; k < n_terms; ++k) {
    const double t = std::pow(static_cast<double>(k), -s);
    sum += t;
    dsum -= std::log(static_cast<double>(k)) * t;
  }
  const double ln_n = std::log(n);
  const double n_pow = std::pow(n, -s);
  // integral term N^{1-s}/(s-1) and midpoint correction N^{-s}/2
  sum += n * n_pow / (s - 1.0) + 0.5 * n_pow;
  dsum += n * n_pow * (-ln_n / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  dsum += 0.5 * n_pow * (-ln_n);
  // Bernoulli corrections B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
  double fact = 1.0;
  for (int j = 1; j <= 6; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    double poch = 1.0, dpoch_sum = 0.0;
    for (int i = 0; i <= 2 * j - 2; ++i) {
      poch *= (s + i);
      dpoch_sum += 1.0 / (s + i);
    }
    const double scale = kBernoulli2j[j - 1] / fact * std::pow(n, -s - 2.0 * j + 1.0);
    sum += scale * poch;
    dsum += scale * poch * (dpoch_sum - ln_n);
  }
  *z = sum;
  *zp = dsum;
}

double euler_gamma_em(int n_terms) {
  const double n = static_cast<double>(n_terms);
  double h = 0.0;
  for (int k = 1; k <= n_terms; ++k) h += 1.0 / k;
  double g = h - std::log(n) - 0.5 / n;
  double n2 = n * n;
  g += 1.0 / (12.0 * n2);
  g -= 1.0 / (120.0 * n2 * n2);
  g += 1.0 / (252.0 * n2 * n2 * n2);
  return g;
}

SpecialConstants compute_constants() {
  SpecialConstants c{};
  const double pi = M_PI;
  c.euler_gamma = euler_gamma_em(40);
  double z2, zp2, z4, zp4;
  zeta_em(2.0, 30, &z2, &zp2);
  zeta_em(4.0, 30, &z4, &zp4);
  // Differentiated reflection formula zeta(1-s) = 2 (2pi)^{-s} cos(pi s/2) Gamma(s) zeta(s),
  // evaluated at s = 2 and s = 4 where sin(pi s/2) = 0.
  const double log_2pi = std::log(2.0 * pi);
  const double psi2 = 1.0 - c.euler_gamma;              // digamma(2)
  const double psi4 = 11.0 / 6.0 - c.euler_gamma;       // digamma(4)
  c.zeta_prime_m1 = (1.0 / 12.0) * (-log_2pi + psi2 + zp2 / z2);
  c.zeta_prime_m3 = -(1.0 / 120.0) * (-log_2pi + psi4 + zp4 / z4);
  c.log_glaisher = 1.0 / 12.0 - c.zeta_prime_m1;
  c.g0 = 4.0 * (4.0 * c.log_glaisher - 40.0 * c.zeta_prime_m3 - 1.0 / 3.0 -
                (4.0 / 45.0) * std::log(2.0));
  return c;
}

}  // namespace

const SpecialConstants& SpecialConstants::get() {
  static const SpecialConstants c = compute_constants();
  return c;
}

double g0_constant() { return SpecialConstants::get().g0; }

}  // namespace udw
