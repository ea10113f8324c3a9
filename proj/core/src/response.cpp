#include "udw/response.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "udw/modes.hpp"

namespace udw {

namespace {

// r sin(kr) Phi_1(r) integrated in panels of half-period pi/k (full scale
// for small k), out to where the mode has decayed away.
double form_factor_integral(double k, const ModelParams& params) {
  const double ell = params.ell;
  auto integrand = [&](double r) {
    return r * std::sin(k * r) * analytic_phi1(r / ell, params);
  };
  const double r_max = 40.0 * ell;
  const double panel = std::min(M_PI * ell, M_PI / k);
  double acc = 0.0;
  double a = 0.0;
  while (a < r_max) {
    const double b = std::min(a + panel, r_max);
    acc += integrate(integrand, a, b, 1e-11, 1e-15).value;
    a = b;
  }
  return acc;
}

// Sampled form factor with cubic interpolation. F decays like
// exp(-pi k ell / 2); beyond k = 30/ell it is below 1e-20 and treated as zero.
class FormFactorTable {
 public:
  explicit FormFactorTable(const ModelParams& params)
      : dk_(0.02 / params.ell), k_cut_(30.0 / params.ell) {
    const int n = static_cast<int>(std::ceil(k_cut_ / dk_)) + 3;
    table_.resize(n);
    for (int i = 0; i < n; ++i) table_[i] = form_factor(i * dk_, params);
  }

  double operator()(double k) const {
    if (k >= k_cut_) return 0.0;
    const double s = k / dk_;
    const int n = static_cast<int>(table_.size());
    const int i = std::min(n - 3, std::max(1, static_cast<int>(s)));
    const double w = s - i;
    const double m0 = 0.5 * (table_[i + 1] - table_[i - 1]);
    const double m1 = 0.5 * (table_[i + 2] - table_[i]);
    const double d = table_[i + 1] - table_[i];
    return table_[i] +
           w * (m0 + w * (3.0 * d - 2.0 * m0 - m1 + w * (m0 + m1 - 2.0 * d)));
  }

  double cutoff() const { return k_cut_; }

 private:
  double dk_;
  double k_cut_;
  std::vector<double> table_;
};

}  // namespace

double form_factor(double k, const ModelParams& params) {
  if (k < 0.0) throw std::invalid_argument("form_factor: k must be nonnegative");
  const double ell = params.ell;
  if (k * ell < 1e-4) {
    // k -> 0 limit: 4 pi int r^2 Phi_1 dr
    auto integrand = [&](double r) { return r * r * analytic_phi1(r / ell, params); };
    return 4.0 * M_PI * integrate(integrand, 0.0, 40.0 * ell, 1e-11, 1e-15).value;
  }
  return 4.0 * M_PI / k * form_factor_integral(k, params);
}

double excitation_probability_reduction(double gap, double T, double ell,
                                        const RealFn& form_factor_fn,
                                        double k_cut) {
  if (!(T > 0.0)) throw std::invalid_argument("excitation_probability: T must be positive");
  auto integrand = [&](double k) {
    const double ff = form_factor_fn(k);
    const double arg = T * (gap + k);
    return k * std::exp(-arg * arg) * ff * ff;
  };
  // Window covering the Gaussian peak and the form-factor oscillation scale.
  const double k_max =
      std::min(std::max(0.0, -gap) + 12.0 / T + 8.0 / ell, k_cut);
  double acc = 0.0, err = 0.0;
  double a = 0.0;
  while (a < k_max) {
    const double panel = std::min(M_PI, M_PI / (std::max(a, 1e-12) * ell)) * ell;
    const double b = std::min(a + std::max(panel, k_max / 4096.0), k_max);
    const QuadResult q = integrate(integrand, a, b, 1e-10, 1e-16);
    acc += q.value;
    err += q.abs_error_estimate;
    a = b;
  }
  const double value = T * T / (2.0 * M_PI) * acc;
  err *= T * T / (2.0 * M_PI);
  if (err > 1e-6 * std::abs(value) + 1e-14) {
    throw QuadratureError("excitation_probability: k-integral did not converge",
                          value, err);
  }
  return value;
}

namespace {

double excitation_with_table(double gap, double T, double ell,
                             const FormFactorTable& table) {
  return excitation_probability_reduction(
      gap, T, ell, [&table](double k) { return table(k); }, table.cutoff());
}

}  // namespace

ResponseResult excitation_probability(double gap, double T, const ModelParams& params) {
  if (!(params.m_d * params.ell > 1.0)) {
    throw std::invalid_argument("excitation_probability: m_d*ell must exceed 1");
  }
  FormFactorTable table(params);
  ResponseResult out;
  out.L = excitation_with_table(gap, T, params.ell, table);
  out.gap = gap;
  out.T = T;
  out.ell = params.ell;
  return out;
}

double pointlike_probability(double gap, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("pointlike_probability: T must be positive");
  const double gT = gap * T;
  const double gauss = std::exp(-gT * gT) / (4.0 * M_PI);
  const double sqrt_pi = std::sqrt(M_PI);
  if (gap > 0.0) {
    return gauss - gT / (4.0 * sqrt_pi) * std::erfc(gT);
  }
  const double a = -gT;  // |Omega| T
  return gauss + a / (4.0 * sqrt_pi) * (1.0 + std::erf(a));
}

ResponseTable response_curve(const std::vector<double>& ell_values,
                             const std::vector<double>& gapT_grid, double m_d) {
  ResponseTable table;
  table.gapT = gapT_grid;
  table.ells = ell_values;
  table.L.resize(ell_values.size());
  for (double g : gapT_grid) {
    if (g == 0.0) {
      throw std::invalid_argument("response_curve: gapT = 0 is not representable "
                                  "(T would vanish at fixed omega_d)");
    }
  }

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UDW_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
  }

  for (std::size_t c = 0; c < ell_values.size(); ++c) {
    ModelParams params;
    params.ell = ell_values[c];
    params.m_d = m_d;
    if (!(m_d * params.ell > 1.0)) {
      throw std::invalid_argument("response_curve: m_d*ell must exceed 1");
    }
    const double omega_d = params.omega_d();
    const FormFactorTable ff(params);
    auto& column = table.L[c];
    column.resize(gapT_grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next.fetch_add(1); i < gapT_grid.size();
           i = next.fetch_add(1)) {
        const double gT = gapT_grid[i];
        const double T = std::abs(gT) / omega_d;
        const double gap = gT > 0.0 ? omega_d : -omega_d;
        column[i] = excitation_with_table(gap, T, params.ell, ff);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  table.pointlike.resize(gapT_grid.size());
  for (std::size_t i = 0; i < gapT_grid.size(); ++i) {
    const double gT = gapT_grid[i];
    table.pointlike[i] = pointlike_probability(gT > 0 ? 1.0 : -1.0, std::abs(gT));
  }
  return table;
}

std::pair<double, double> final_state(double lambda_coupling, double L) {
  if (L < 0.0) throw std::invalid_argument("final_state: L must be nonnegative");
  const double w1 = lambda_coupling * lambda_coupling * L;
  if (w1 >= 1.0) {
    throw std::invalid_argument("final_state: perturbative regime violated (lambda^2 L >= 1)");
  }
  return {1.0 - w1, w1};
}

}  // namespace udw
