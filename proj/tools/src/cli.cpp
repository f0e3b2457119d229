#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nfw/analysis.hpp"
#include "nfw/csv_io.hpp"
#include "nfw/transform.hpp"
#include "nfw/windows.hpp"

namespace nfw::cli {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string window;
  std::string m;
  std::string sigma;
  int N = 1024;
  std::optional<double> beta_override;
  double tol = 1e-12;
  int grid = 0;
  int rmax_cap = 0;
  double b = 2.0;
  std::string in_coeffs;
  std::string in_nodes;
  std::string in_values;
  std::string out;
  bool check = false;
  std::string method = "periodization";
  bool allow_any_sigma = false;
};

constexpr double kAllowedSigmas[] = {1.25, 1.5, 2.0};
constexpr int kPeriodGrid = 64;

const std::vector<Kind> kTheoremKinds = {Kind::BSpline, Kind::Algebraic, Kind::Bessel, Kind::Sinh,
                                         Kind::ModifiedCosh, Kind::Exp, Kind::Cosh, Kind::ModifiedExp,
                                         Kind::ModifiedSinh};

std::string fmt(double x) { return format_double(x); }

std::string fmt_sigma(double sigma) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", sigma);
  return buf;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<int> parse_m(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw ConfigError("--m range '" + text + "' is empty");
    std::vector<int> ms;
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    return ms;
  } catch (const std::logic_error&) {
    throw ConfigError("--m expects an integer or a range a..b, got '" + text + "'");
  }
}

std::vector<double> parse_sigma(const std::string& text, bool allow_any) {
  std::vector<double> sigmas;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double s = 0.0;
    try {
      std::size_t used = 0;
      s = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ConfigError("--sigma expects a number or a comma list, got '" + text + "'");
    }
    if (!allow_any && std::find(std::begin(kAllowedSigmas), std::end(kAllowedSigmas), s) == std::end(kAllowedSigmas)) {
      throw ConfigError("sigma " + fmt(s) + " not in {1.25, 1.5, 2} (use --allow-any-sigma)");
    }
    sigmas.push_back(s);
  }
  if (sigmas.empty()) throw ConfigError("--sigma is empty");
  return sigmas;
}

WindowKind parse_window(const std::string& name, double b) {
  const auto kind = parse_kind(name);
  if (!kind) throw ConfigError("unknown window '" + name + "'");
  return WindowKind{*kind, b};
}

std::vector<WindowKind> window_list(const RunConfig& cfg, const std::vector<Kind>& defaults) {
  if (!cfg.window.empty()) return {parse_window(cfg.window, cfg.b)};
  std::vector<WindowKind> kinds;
  for (Kind k : defaults) kinds.push_back(WindowKind{k, cfg.b});
  return kinds;
}

void require_power_of_two(int N) {
  if (!is_power_of_two(N) || N < 2) throw ConfigError("--N must be a power of two >= 2");
}

Window make_window(const RunConfig& cfg, const WindowKind& kind, int m, double sigma, std::ostream& err) {
  const WindowParams params = make_params(kind, m, sigma, cfg.N, cfg.beta_override);
  if (const auto note = params_warning(params)) err << "warning: " << *note << '\n';
  return Window(kind, params);
}

int single_m(const RunConfig& cfg) {
  const auto ms = parse_m(cfg.m.empty() ? "4" : cfg.m);
  if (ms.size() != 1) throw ConfigError("this command needs a single --m");
  return ms.front();
}

double single_sigma(const RunConfig& cfg) {
  const auto ss = parse_sigma(cfg.sigma.empty() ? "2" : cfg.sigma, cfg.allow_any_sigma);
  if (ss.size() != 1) throw ConfigError("this command needs a single --sigma");
  return ss.front();
}

std::vector<Method> methods(const RunConfig& cfg) {
  if (cfg.method == "aliasing") return {Method::Aliasing};
  if (cfg.method == "periodization") return {Method::Periodization};
  if (cfg.method == "both") return {Method::Aliasing, Method::Periodization};
  throw ConfigError("--method must be aliasing, periodization or both");
}

ErrorConstantResult measure(const RunConfig& cfg, const Window& window, Method method) {
  if (method == Method::Aliasing) {
    AliasingOptions options;
    options.tol = cfg.tol;
    if (cfg.grid > 0) options.grid = cfg.grid;
    options.rmax_cap = cfg.rmax_cap;
    return error_constant_aliasing(window, options);
  }
  return error_constant_periodization(window, cfg.grid > 0 ? cfg.grid : kPeriodGrid);
}

// Runs `body` with the --out file or `fallback`.
template <class Body>
void with_output(const std::string& path, std::ostream& fallback, Body body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  body(file);
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

std::string beta_cell(const Window& w) {
  if (w.is_bspline_family()) return "";
  return fmt(w.params().beta);
}

void cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.window.empty()) throw ConfigError("constants needs --window");
  require_power_of_two(cfg.N);
  const WindowKind kind = parse_window(cfg.window, cfg.b);
  const auto ms = parse_m(cfg.m.empty() ? "2..6" : cfg.m);
  const auto sigmas = parse_sigma(cfg.sigma.empty() ? "1.25,1.5,2" : cfg.sigma, cfg.allow_any_sigma);
  const auto which = methods(cfg);
  std::ostringstream rows;
  rows << "window,m,sigma,N,beta,method,e_measured_lower,e_measured_upper,r_max,grid,e_measured\n";
  for (int m : ms) {
    for (double sigma : sigmas) {
      const Window w = make_window(cfg, kind, m, sigma, err);
      for (Method method : which) {
        const auto r = measure(cfg, w, method);
        rows << describe(kind) << ',' << m << ',' << fmt(sigma) << ',' << cfg.N << ',' << beta_cell(w) << ','
             << method_name(method) << ',' << fmt(r.lower) << ',' << fmt(r.upper) << ',' << r.r_max << ','
             << r.grid << ',' << fmt(r.value) << '\n';
      }
    }
  }
  with_output(cfg.out, out, [&](std::ostream& os) { os << rows.str(); });
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto kinds = window_list(cfg, kTheoremKinds);
  const auto ms = parse_m(cfg.m.empty() ? "2..6" : cfg.m);
  const auto sigmas = parse_sigma(cfg.sigma.empty() ? "1.25,1.5,2" : cfg.sigma, cfg.allow_any_sigma);
  std::ostringstream rows;
  rows << "window,m,sigma,bound,bound_variant,kaiser_bessel_reference,proxy\n";
  for (const auto& kind : kinds) {
    for (int m : ms) {
      for (double sigma : sigmas) {
        const BoundInfo info = theoretical_bound(kind, m, sigma);
        const bool mcosh_family = info.source == Kind::ModifiedCosh;
        rows << describe(kind) << ',' << m << ',' << fmt(sigma) << ',' << fmt(info.value) << ','
             << (mcosh_family ? fmt(mcosh_bound_minus_half(m, sigma)) : std::string()) << ','
             << fmt(kaiser_bessel_reference(m, sigma)) << ','
             << (info.proxy ? std::string(kind_name(info.source)) : std::string()) << '\n';
      }
    }
  }
  with_output(cfg.out, out, [&](std::ostream& os) { os << rows.str(); });
}

void cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, int& code) {
  require_power_of_two(cfg.N);
  const auto kinds = window_list(cfg, kTheoremKinds);
  const auto ms = parse_m(cfg.m.empty() ? "2..6" : cfg.m);
  const auto sigmas = parse_sigma(cfg.sigma.empty() ? "1.25,1.5,2" : cfg.sigma, cfg.allow_any_sigma);
  std::ostringstream rows;
  rows << "window,m,sigma,N,measured,bound,proxy,ok\n";
  bool all_ok = true;
  for (const auto& kind : kinds) {
    for (int m : ms) {
      for (double sigma : sigmas) {
        const BoundInfo info = theoretical_bound(kind, m, sigma);
        const Window w = make_window(cfg, kind, m, sigma, err);
        const auto r = error_constant_periodization(w, cfg.grid > 0 ? cfg.grid : kPeriodGrid);
        const bool ok = r.upper <= info.value * (1.0 + 1e-9);
        if (!ok && !info.proxy) all_ok = false;
        rows << describe(kind) << ',' << m << ',' << fmt(sigma) << ',' << cfg.N << ',' << fmt(r.upper) << ','
             << fmt(info.value) << ',' << (info.proxy ? std::string(kind_name(info.source)) : std::string())
             << ',' << (ok ? "1" : "0") << '\n';
      }
    }
  }
  with_output(cfg.out, out, [&](std::ostream& os) { os << rows.str(); });
  if (!all_ok) {
    err << "error: measured constant exceeds a theoretical bound\n";
    code = kBoundViolation;
  }
}

void cmd_figures(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_power_of_two(cfg.N);
  const auto ms = parse_m(cfg.m.empty() ? "2..6" : cfg.m);
  const auto sigmas = parse_sigma(cfg.sigma.empty() ? "1.25,1.5,2" : cfg.sigma, cfg.allow_any_sigma);
  const Method method = methods(cfg).front();
  const std::string dir = cfg.out.empty() ? "." : cfg.out;
  const std::vector<Kind> fig1 = {Kind::BSpline, Kind::Algebraic, Kind::Bessel, Kind::Sinh, Kind::ModifiedCosh};
  const std::vector<Kind> fig2 = {Kind::Sinh, Kind::Exp, Kind::Cosh, Kind::ModifiedCosh, Kind::ModifiedExp,
                                  Kind::ModifiedSinh};
  for (double sigma : sigmas) {
    std::map<std::pair<Kind, int>, double> cache;
    auto value = [&](Kind k, int m) {
      const auto key = std::make_pair(k, m);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      const WindowKind kind{k, cfg.b};
      const Window w = make_window(cfg, kind, m, sigma, err);
      const double v = measure(cfg, w, method).value;
      cache.emplace(key, v);
      return v;
    };
    const std::string tag = fmt_sigma(sigma);
    std::ostringstream one;
    one << "m";
    for (Kind k : fig1) one << ',' << kind_name(k);
    one << '\n';
    for (int m : ms) {
      one << m;
      for (Kind k : fig1) one << ',' << fmt(value(k, m));
      one << '\n';
    }
    std::ostringstream two;
    two << "m";
    for (Kind k : fig2) two << ',' << kind_name(k);
    two << ",bound_sinh,bound_mcosh\n";
    for (int m : ms) {
      two << m;
      for (Kind k : fig2) two << ',' << fmt(value(k, m));
      two << ',' << fmt(theoretical_bound(WindowKind{Kind::Sinh}, m, sigma).value) << ','
          << fmt(theoretical_bound(WindowKind{Kind::ModifiedCosh}, m, sigma).value) << '\n';
    }
    const std::string p1 = dir + "/fig1_" + tag + ".csv";
    const std::string p2 = dir + "/fig2_" + tag + ".csv";
    with_output(p1, out, [&](std::ostream& os) { os << one.str(); });
    with_output(p2, out, [&](std::ostream& os) { os << two.str(); });
    out << "wrote " << p1 << '\n' << "wrote " << p2 << '\n';
  }
}

void report_check(std::ostream& out, double max_error, double budget) {
  out << "# check max_error=" << fmt(max_error) << " budget=" << fmt(budget)
      << " ok=" << (max_error <= budget ? 1 : 0) << '\n';
  if (!(max_error <= budget)) {
    throw BudgetViolation("max error " + fmt(max_error) + " exceeds budget " + fmt(budget));
  }
}

double max_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

void cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.window.empty()) throw ConfigError("transform needs --window");
  if (cfg.in_coeffs.empty() || cfg.in_nodes.empty()) throw ConfigError("transform needs --in-coeffs and --in-nodes");
  require_power_of_two(cfg.N);
  const Window w = make_window(cfg, parse_window(cfg.window, cfg.b), single_m(cfg), single_sigma(cfg), err);
  const NodeSet nodes = read_nodes_file(cfg.in_nodes);
  const TrigPolynomial poly = read_coefficients_file(cfg.in_coeffs, cfg.N);
  const NfftPlan plan(w, nodes);
  const auto values = nfft_forward(plan, poly);
  with_output(cfg.out, out, [&](std::ostream& os) { write_values(os, values); });
  if (cfg.check) {
    const double norm = wiener_norm(poly);
    const double e = error_constant_periodization(w, kPeriodGrid).upper;
    const double budget = e * norm * (1.0 + 1e-9) + plan.rounding_allowance() * norm;
    report_check(out, max_deviation(values, ndft_forward(poly, nodes)), budget);
  }
}

void cmd_adjoint(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.window.empty()) throw ConfigError("adjoint needs --window");
  if (cfg.in_values.empty() || cfg.in_nodes.empty()) throw ConfigError("adjoint needs --in-values and --in-nodes");
  require_power_of_two(cfg.N);
  const Window w = make_window(cfg, parse_window(cfg.window, cfg.b), single_m(cfg), single_sigma(cfg), err);
  const NodeSet nodes = read_nodes_file(cfg.in_nodes);
  const auto values = read_values_file(cfg.in_values);
  if (values.size() != nodes.size()) {
    throw ConfigError(std::to_string(values.size()) + " values for " + std::to_string(nodes.size()) + " nodes");
  }
  const NfftPlan plan(w, nodes);
  const auto coeffs = nfft_adjoint(plan, values);
  with_output(cfg.out, out, [&](std::ostream& os) { write_coefficients(os, coeffs); });
  if (cfg.check) {
    double norm = 0.0;
    for (const auto& v : values) norm += std::abs(v);
    const double e = error_constant_periodization(w, kPeriodGrid).upper;
    const double budget = e * norm * (1.0 + 1e-9) + plan.rounding_allowance() * norm;
    report_check(out, max_deviation(coeffs, ndft_adjoint(values, nodes, cfg.N)), budget);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--window,--kind", cfg.window, "Window kind");
  sub->add_option("--m", cfg.m, "Truncation parameter: integer or range a..b");
  sub->add_option("--sigma", cfg.sigma, "Oversampling factor: number or comma list");
  sub->add_option("--N", cfg.N, "Polynomial order (power of two)")->capture_default_str();
  sub->add_option("--beta-override", cfg.beta_override, "Shape parameter beta");
  sub->add_option("--b", cfg.b, "Modified B-spline parameter (half-integer)")->capture_default_str();
  sub->add_option("--grid", cfg.grid, "Sup-search grid (0: method default)");
  sub->add_option("--out", cfg.out, "Output file (figures: output directory)");
  sub->add_flag("--allow-any-sigma", cfg.allow_any_sigma, "Accept sigma outside {1.25, 1.5, 2}");
}

void add_measurement(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "Aliasing tail tolerance")->capture_default_str();
  sub->add_option("--rmax-cap", cfg.rmax_cap, "Aliasing truncation cap (0: kind default)");
  sub->add_option("--method", cfg.method, "aliasing, periodization or both")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"NFFT window functions and C(T)-error constants", "nfw"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* constants = app.add_subcommand("constants", "Measure error constants");
  auto* bounds = app.add_subcommand("bounds", "Evaluate theoretical bounds");
  auto* transform = app.add_subcommand("transform", "Fast forward NFFT of a coefficient file");
  auto* adjoint = app.add_subcommand("adjoint", "Fast adjoint NFFT of a value file");
  auto* verify = app.add_subcommand("verify", "Compare measured constants with the bounds");
  auto* figures = app.add_subcommand("figures", "Write figure data CSV files");
  for (auto* sub : {constants, bounds, transform, adjoint, verify, figures}) add_common(sub, cfg);
  for (auto* sub : {constants, verify, figures}) add_measurement(sub, cfg);
  for (auto* sub : {transform, adjoint}) {
    sub->add_option("--in-nodes", cfg.in_nodes, "Node CSV");
    sub->add_flag("--check", cfg.check, "Compare with the direct sum and the error budget");
  }
  transform->add_option("--in-coeffs", cfg.in_coeffs, "Coefficient CSV (k,re,im)");
  adjoint->add_option("--in-values", cfg.in_values, "Value CSV (j,re,im)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  int code = kOk;
  try {
    if (constants->parsed()) cmd_constants(cfg, out, err);
    if (bounds->parsed()) cmd_bounds(cfg, out);
    if (transform->parsed()) cmd_transform(cfg, out, err);
    if (adjoint->parsed()) cmd_adjoint(cfg, out, err);
    if (verify->parsed()) cmd_verify(cfg, out, err, code);
    if (figures->parsed()) cmd_figures(cfg, out, err);
  } catch (const NonpositiveCoefficient& e) {
    err << "error: " << e.what() << '\n';
    return kNonpositiveCoefficient;
  } catch (const BudgetViolation& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return code;
}

}  // namespace nfw::cli
