// udw: batch CLI around the detector stress-energy library. Emits plot-ready
// CSV/JSON tables and the machine-readable verification report.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udw/csv.hpp"
#include "udw/fluid.hpp"
#include "udw/modes.hpp"
#include "udw/profiles.hpp"
#include "udw/response.hpp"
#include "udw/stress.hpp"
#include "udw/verify.hpp"

namespace {

struct Options {
  std::vector<double> ells{1.0};
  double mu = 0.2;
  double eta = 0.0;
  double alpha = -6.0;
  double m_c = 2.0;
  double m_d = 5.0;
  double T = 1.0;
  double lambda = 1.0;
  std::string state = "ground";
  double x_max = 12.0;
  int points = 600;
  std::string out = "-";
  std::string format = "csv";
  std::string figure;
  bool audit_printed = false;
  bool strict_paper = false;
};

udw::DetectorState parse_state(const std::string& s) {
  if (s == "ground") return udw::DetectorState::ground();
  if (s == "excited") return udw::DetectorState::excited();
  const std::string prefix = "mixture:";
  if (s.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    const double p = std::stod(s.substr(prefix.size()), &used);
    if (used != s.size() - prefix.size()) {
      throw std::invalid_argument("malformed mixture probability in --state " + s);
    }
    return udw::DetectorState::mixture(p);
  }
  throw std::invalid_argument("unknown --state '" + s +
                              "' (expected ground, excited, or mixture:<p>)");
}

udw::ModelParams make_params(const Options& opt, double ell) {
  udw::ModelParams p;
  p.ell = ell;
  p.mu = opt.mu;
  p.eta = opt.eta;
  p.alpha = opt.alpha;
  p.m_c = opt.m_c;
  p.m_d = opt.m_d;
  p.validate();
  return p;
}

std::string join_ells(const std::vector<double>& ells) {
  std::string s;
  for (std::size_t i = 0; i < ells.size(); ++i) {
    if (i) s += ',';
    s += udw::format_value(ells[i]);
  }
  return s;
}

std::vector<std::string> effective_config(const Options& opt,
                                          const std::string& command) {
  std::vector<std::string> meta;
  meta.push_back("command=" + command);
  meta.push_back("ell=" + join_ells(opt.ells));
  meta.push_back("mu=" + udw::format_value(opt.mu));
  meta.push_back("eta=" + udw::format_value(opt.eta));
  meta.push_back("alpha=" + udw::format_value(opt.alpha));
  meta.push_back("m_c=" + udw::format_value(opt.m_c));
  meta.push_back("m_d=" + udw::format_value(opt.m_d));
  meta.push_back("T=" + udw::format_value(opt.T));
  meta.push_back("lambda=" + udw::format_value(opt.lambda));
  meta.push_back("state=" + opt.state);
  meta.push_back("x_max=" + udw::format_value(opt.x_max));
  meta.push_back("points=" + std::to_string(opt.points));
  meta.push_back("format=" + opt.format);
  if (!opt.figure.empty()) meta.push_back("figure=" + opt.figure);
  return meta;
}

void emit(const Options& opt, const udw::CsvTable& table) {
  std::string payload;
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    auto& meta = j["metadata"];
    for (const auto& line : table.metadata) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        meta[line] = "";
      } else {
        meta[line.substr(0, eq)] = line.substr(eq + 1);
      }
    }
    j["header"] = table.header;
    j["rows"] = table.rows;
    payload = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    payload = udw::to_csv(table);
  } else {
    throw std::invalid_argument("unknown --format '" + opt.format + "'");
  }
  if (opt.out == "-") {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + opt.out);
    f << payload;
  }
}

std::vector<double> make_grid(const Options& opt) {
  return udw::default_grid(opt.x_max, opt.points);
}

udw::CsvTable fluid_table(const Options& opt) {
  const auto params = make_params(opt, opt.ells.back());
  const auto state = parse_state(opt.state);
  if (state.kind == udw::DetectorState::Kind::Mixture) {
    throw std::invalid_argument(
        "fluid: mixtures are combined at the tensor level; pick a pure state");
  }
  const auto sol = udw::solve_fluid(params, state, make_grid(opt));
  udw::CsvTable t;
  t.metadata = effective_config(opt, "fluid");
  t.header = {"x", "pressure", "density", "w",
              "rho_plus_P", "rho_plus_3P", "rho_minus_absP"};
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    const double P = sol.pressure[i], rho = sol.density[i];
    t.rows.push_back({sol.grid[i], P, rho, sol.w[i], rho + P, rho + 3.0 * P,
                      rho - std::abs(P)});
  }
  return t;
}

udw::CsvTable stress_table(const Options& opt) {
  const auto params = make_params(opt, opt.ells.back());
  const auto state = parse_state(opt.state);
  const auto grid = make_grid(opt);
  const auto fluid = udw::solve_fluid(
      params,
      state.kind == udw::DetectorState::Kind::Mixture ? udw::DetectorState::ground()
                                                      : state,
      grid);
  const auto tensor = udw::assemble_total(params, state, fluid);
  const auto landau = udw::landau_decompose(tensor);

  udw::CsvTable t;
  t.metadata = effective_config(opt, "stress");
  try {
    const auto res = udw::conservation_residual(tensor);
    t.metadata.push_back("conservation_residual_sup=" +
                         udw::format_value(res.sup));
    t.metadata.push_back("conservation_fd_error_estimate=" +
                         udw::format_value(res.fd_error_estimate));
  } catch (const std::invalid_argument& e) {
    t.metadata.push_back(std::string("conservation_residual_sup=unavailable (") +
                         e.what() + ")");
  }
  t.header = {"x", "rhoE", "R", "Pperp", "p_iso", "Pi"};

  udw::StressComponents printed;
  if (opt.audit_printed) {
    if (state.kind != udw::DetectorState::Kind::Ground) {
      throw std::invalid_argument("--audit-printed applies to the ground state");
    }
    printed = udw::printed_components(params, fluid);
    t.header.insert(t.header.end(),
                    {"printed_rhoE", "printed_R", "printed_Pperp"});
    try {
      const auto res = udw::conservation_residual(printed);
      t.metadata.push_back("printed_conservation_residual_sup=" +
                           udw::format_value(res.sup));
    } catch (const std::invalid_argument&) {
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i],      tensor.rhoE[i], tensor.R[i],
                            tensor.Pperp[i], landau.p[i],  landau.Pi[i]};
    if (opt.audit_printed) {
      row.insert(row.end(),
                 {printed.rhoE[i], printed.R[i], printed.Pperp[i]});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<double> signed_gapT_grid(int points) {
  std::vector<double> g;
  const int n = std::max(2, points / 2);
  for (int i = n - 1; i >= 0; --i) {
    g.push_back(-(0.1 + (10.0 - 0.1) * i / (n - 1)));
  }
  for (int i = 0; i < n; ++i) {
    g.push_back(0.1 + (10.0 - 0.1) * i / (n - 1));
  }
  return g;
}

std::string ell_label(double ell) {
  std::ostringstream s;
  s << "L_ell_" << ell;
  return s.str();
}

udw::CsvTable response_table(const Options& opt) {
  for (double ell : opt.ells) {
    auto p = make_params(opt, ell);
    (void)p;
  }
  const auto grid = signed_gapT_grid(opt.points);
  const auto curve = udw::response_curve(opt.ells, grid, opt.m_d);
  udw::CsvTable t;
  t.metadata = effective_config(opt, "response");
  t.header = {"gapT"};
  for (double ell : opt.ells) t.header.push_back(ell_label(ell));
  t.header.push_back("pointlike");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (std::size_t c = 0; c < opt.ells.size(); ++c) row.push_back(curve.L[c][i]);
    row.push_back(curve.pointlike[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

udw::CsvTable scan_mu_table(const Options& opt) {
  const double ell = opt.ells.back();
  const double ell2 = ell * ell;
  const auto grid = udw::default_grid(12.0, 400);
  udw::CsvTable t;
  t.metadata = effective_config(opt, "scan-mu");
  const auto ms = udw::mu_star(opt.eta, ell);
  t.metadata.push_back("mu_star=" + udw::format_value(ms.value));
  t.metadata.push_back("mu_star_over_ell2=" +
                       udw::format_value(ms.value / ell2));
  t.metadata.push_back(std::string("mu_star_unconstrained=") +
                       (ms.unconstrained ? "true" : "false"));
  t.metadata.push_back(
      "mu_star_closed_form=" +
      udw::format_value(opt.eta > 1.0 / 3.0
                            ? ell2
                            : ell2 / (1.0 + 0.5 * (1.0 - 3.0 * opt.eta) *
                                                udw::g0_constant())));
  t.header = {"mu_over_ell2", "min_rho_plus_P", "min_rho_plus_3P",
              "min_rho_minus_absP"};
  const int n = std::max(2, opt.points);
  for (int i = 0; i < n; ++i) {
    const double mu_hat = 0.01 + (0.99 - 0.01) * i / (n - 1);
    Options local = opt;
    local.mu = mu_hat * ell2;
    const auto params = make_params(local, ell);
    const auto sol = udw::solve_fluid(params, udw::DetectorState::ground(), grid);
    const auto m = udw::energy_condition_margins(sol.density, sol.pressure);
    t.rows.push_back({mu_hat, m.rho_plus_P, m.rho_plus_3P, m.rho_minus_absP});
  }
  return t;
}

int cmd_verify(const Options& opt) {
  const auto report = udw::run_verify(opt.strict_paper);
  auto j = nlohmann::ordered_json::parse(udw::to_json(report));
  nlohmann::ordered_json out;
  auto& cfg = out["config"];
  for (const auto& line : effective_config(opt, "verify")) {
    const auto eq = line.find('=');
    cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (auto& [key, value] : j.items()) out[key] = value;
  const std::string payload = out.dump(2) + "\n";
  if (opt.out == "-") {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + opt.out);
    f << payload;
  }
  return report.exit_code();
}

udw::CsvTable figure_table(Options opt) {
  const std::string& fig = opt.figure;
  const double ell = opt.ells.back();
  // paper parameter values baked into every figure
  opt.mu = ell * ell / 5.0;
  opt.m_c = 2.0 / ell;
  opt.m_d = 5.0 / ell;

  if (fig == "fig1" || fig == "fig2") {
    opt.eta = fig == "fig2" ? 1.0 : 0.0;
    opt.state = "ground";
    auto t = fluid_table(opt);
    t.metadata = effective_config(opt, "figure");
    return t;
  }
  if (fig == "figw") {
    udw::CsvTable t;
    t.metadata = effective_config(opt, "figure");
    t.header = {"x", "w_eta0", "w_eta1"};
    const auto grid = make_grid(opt);
    Options o0 = opt, o1 = opt;
    o0.eta = 0.0;
    o1.eta = 1.0;
    const auto s0 = udw::solve_fluid(make_params(o0, ell),
                                     udw::DetectorState::ground(), grid);
    const auto s1 = udw::solve_fluid(make_params(o1, ell),
                                     udw::DetectorState::ground(), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.rows.push_back({grid[i], s0.w[i], s1.w[i]});
    }
    return t;
  }
  if (fig == "tmunu0" || fig == "tmunu1") {
    opt.eta = 0.0;
    opt.state = fig == "tmunu1" ? "excited" : "ground";
    auto t = stress_table(opt);
    auto meta = effective_config(opt, "figure");
    // keep the conservation summary lines appended by stress_table
    for (const auto& line : t.metadata) {
      if (line.rfind("conservation", 0) == 0 ||
          line.rfind("printed_conservation", 0) == 0) {
        meta.push_back(line);
      }
    }
    t.metadata = std::move(meta);
    return t;
  }
  if (fig == "deviator") {
    opt.eta = 0.0;
    opt.state = "ground";
    const auto params = make_params(opt, ell);
    const auto grid = make_grid(opt);
    const auto fluid = udw::solve_fluid(params, udw::DetectorState::ground(), grid);
    const auto tensor = udw::assemble_total(params, udw::DetectorState::ground(), fluid);
    const auto landau = udw::landau_decompose(tensor);
    udw::CsvTable t;
    t.metadata = effective_config(opt, "figure");
    t.header = {"x", "Pi", "p_iso", "Pi_over_p"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.rows.push_back({grid[i], landau.Pi[i], landau.p[i],
                        landau.Pi[i] / landau.p[i]});
    }
    return t;
  }
  if (fig == "excitation") {
    // detector-size sweep toward the pointlike limit; m_d fixed. The fluid
    // sector plays no role here, so mu and m_c are pinned to values valid
    // for the smallest ell in the sweep.
    opt.ells = {0.25, 0.5, 1.0};
    opt.m_d = 5.0;
    opt.mu = 0.25 * 0.25 / 5.0;
    opt.m_c = 2.0 / 0.25;
    auto t = response_table(opt);
    t.metadata = effective_config(opt, "figure");
    return t;
  }
  throw std::invalid_argument(
      "unknown --figure '" + fig +
      "' (expected fig1|fig2|figw|tmunu0|deviator|tmunu1|excitation)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"stress-energy tensor and response of a finite-size particle detector"};
  app.require_subcommand(1);
  app.set_config("--config")->configurable(false);

  app.add_option("--ell", opt.ells, "localization scale(s); repeat for response columns")
      ->capture_default_str();
  app.add_option("--mu", opt.mu, "fluid coupling, length^2")->capture_default_str();
  app.add_option("--eta", opt.eta, "fluid Lagrangian choice (0 or 1)")
      ->capture_default_str();
  app.add_option("--alpha", opt.alpha, "detector-confinement coupling")
      ->capture_default_str();
  app.add_option("--m-c", opt.m_c, "confining field mass, 1/length")
      ->capture_default_str();
  app.add_option("--m-d", opt.m_d, "detector field mass, 1/length")
      ->capture_default_str();
  app.add_option("--T", opt.T, "Gaussian switching width")->capture_default_str();
  app.add_option("--lambda", opt.lambda, "coupling strength lambda")
      ->capture_default_str();
  app.add_option("--state", opt.state, "ground | excited | mixture:<p>")
      ->capture_default_str();
  app.add_option("--x-max", opt.x_max, "grid extent in units of ell")
      ->capture_default_str();
  app.add_option("--points", opt.points, "grid point count")->capture_default_str();
  app.add_option("--out", opt.out, "output path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "csv | json")->capture_default_str();
  app.add_option("--figure", opt.figure,
                 "figure preset: fig1|fig2|figw|tmunu0|deviator|tmunu1|excitation");
  app.add_flag("--audit-printed", opt.audit_printed,
               "append the printed-formula columns for audit");
  app.add_flag("--strict-paper", opt.strict_paper,
               "promote flagged source-material discrepancies to failures");

  auto* c_fluid = app.add_subcommand("fluid", "fluid pressure/density table");
  auto* c_stress = app.add_subcommand("stress", "stress-energy component table");
  auto* c_response = app.add_subcommand("response", "excitation probability curves");
  auto* c_scan = app.add_subcommand("scan-mu", "energy-condition margins vs mu");
  auto* c_verify = app.add_subcommand("verify", "run the invariant audit");
  auto* c_figure = app.add_subcommand("figure", "emit a figure preset's data");
  for (auto* sub : {c_fluid, c_stress, c_response, c_scan, c_verify, c_figure}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_fluid->parsed()) {
      emit(opt, fluid_table(opt));
    } else if (c_stress->parsed()) {
      emit(opt, stress_table(opt));
    } else if (c_response->parsed()) {
      emit(opt, response_table(opt));
    } else if (c_scan->parsed()) {
      emit(opt, scan_mu_table(opt));
    } else if (c_verify->parsed()) {
      return cmd_verify(opt);
    } else if (c_figure->parsed()) {
      if (opt.figure.empty()) {
        throw std::invalid_argument("figure: --figure <preset> is required");
      }
      emit(opt, figure_table(opt));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
