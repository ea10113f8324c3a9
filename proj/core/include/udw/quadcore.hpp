#ifndef UDW_QUADCORE_HPP
#define UDW_QUADCORE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace udw {

using RealFn = std::function<double(double)>;

/// Integral estimate with an absolute error bound.
struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Thrown when adaptive subdivision fails to reach the requested tolerance.
/// Carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_value, double achieved_error)
      : std::runtime_error(what), best_value(best_value), achieved_error(achieved_error) {}
  double best_value;
  double achieved_error;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature on [a, b]. Requires a < b and
/// f finite on the interval; removable singularities are the caller's problem.
QuadResult integrate(const RealFn& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 1e-12);

/// Integral over [a, inf) of a function decaying at least exponentially with
/// the given scale. Truncates at R = max(a, 40*decay_scale) and folds an
/// analytic tail bound into the error estimate. Throws QuadratureError when
/// the decay assumption is violated.
QuadResult integrate_tail(const RealFn& f, double a, double decay_scale,
                          double rel_tol = 1e-10);

/// Central finite difference of 4th-order accuracy; order is 1 or 2.
double derivative(const RealFn& f, double x, int order, double step);

/// Bisection on [lo, hi]; requires a sign change. Returns the midpoint of the
/// final bracket, whose width is below tol.
double bisect_root(const RealFn& f, double lo, double hi, double tol);

/// Constants entering the closed form for the central pressure P(0).
/// zeta_prime_m1 and zeta_prime_m3 are computed from the differentiated
/// functional equation with Euler-Maclaurin series at s = 2, 4; log_glaisher
/// is 1/12 - zeta'(-1).
struct SpecialConstants {
  double euler_gamma;
  double zeta_prime_m1;
  double zeta_prime_m3;
  double log_glaisher;
  double g0;
  static const SpecialConstants& get();
};

/// g0 = 4(4 log A - 40 zeta'(-3) - 1/3 - (4/45) log 2), about 1.53971.
double g0_constant();

}  // namespace udw

#endif
