#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "nfw/analysis.hpp"
#include "nfw/csv_io.hpp"
#include "nfw/specfun.hpp"
#include "nfw/transform.hpp"
#include "nfw/windows.hpp"
#include "published.hpp"

namespace {

using nfw::Complex;
using nfw::Kind;
using nfw::Window;
using nfw::WindowKind;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
  std::vector<std::string> notes;

  void fail(std::string detail) {
    pass = false;
    details.push_back(std::move(detail));
  }
};

std::string fmt(double x) { return nfw::format_double(x); }

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", x);
  return buf;
}

Window make(WindowKind kind, int m, double sigma, int N, std::optional<double> beta = std::nullopt) {
  return Window(kind, nfw::make_params(kind, m, sigma, N, beta));
}

std::string cell_name(const WindowKind& kind, int m, double sigma, int N = 0) {
  std::string s = nfw::describe(kind) + " m=" + std::to_string(m) + " sigma=" + fmt_short(sigma);
  if (N > 0) s += " N=" + std::to_string(N);
  return s;
}

// Relative distance from a published value to the measured bracket.
double bracket_distance(double published, double lower, double upper) {
  if (published >= lower && published <= upper) return 0.0;
  return std::min(std::abs(published - lower), std::abs(published - upper)) / published;
}

// First figure: five windows, m = 2..6, three sigmas, N = 1024.
Outcome criterion1() {
  Outcome out;
  int matched = 0;
  int total = 0;
  for (std::size_t s = 0; s < nfw::published::kSigmas.size(); ++s) {
    const double sigma = nfw::published::kSigmas[s];
    for (const auto& row : nfw::published::kWindowTable[s]) {
      const WindowKind kind{row.kind};
      for (int m = 2; m <= 6; ++m) {
        const double want = row.values[static_cast<std::size_t>(m - 2)];
        const auto r = nfw::error_constant_periodization(make(kind, m, sigma, 1024));
        double dist = bracket_distance(want, r.lower, r.upper);
        if (dist > 0.05 && row.kind == Kind::Algebraic) {
          const double beta = kPi * m * (2.0 - 1.0 / sigma);
          const auto alt = nfw::error_constant_periodization(make(kind, m, sigma, 1024, beta));
          const double alt_dist = bracket_distance(want, alt.lower, alt.upper);
          if (alt_dist <= 0.05) {
            out.notes.push_back(cell_name(kind, m, sigma) + " matched with beta = pi m (2 - 1/sigma)");
          }
          dist = std::min(dist, alt_dist);
        }
        ++total;
        if (dist <= 0.05) {
          ++matched;
        } else {
          out.fail(cell_name(kind, m, sigma) + ": published " + fmt(want) + " measured [" + fmt(r.lower) + ", " +
                   fmt(r.upper) + "] off by " + fmt_short(100.0 * dist) + "%");
        }
      }
    }
  }
  out.summary = std::to_string(matched) + "/" + std::to_string(total) + " cells within 5%";
  return out;
}

void check_group(Outcome& out, const std::vector<Kind>& kinds, const std::array<std::array<double, 5>, 3>& curve,
                 double tol, int& cells, int& ok_cells) {
  for (std::size_t s = 0; s < nfw::published::kSigmas.size(); ++s) {
    const double sigma = nfw::published::kSigmas[s];
    for (int m = 2; m <= 6; ++m) {
      const double want = curve[s][static_cast<std::size_t>(m - 2)];
      double lo = INFINITY;
      double hi = 0.0;
      bool cell_ok = true;
      for (Kind k : kinds) {
        const WindowKind kind{k};
        const auto r = nfw::error_constant_periodization(make(kind, m, sigma, 1024));
        lo = std::min(lo, r.upper);
        hi = std::max(hi, r.upper);
        const double dist = bracket_distance(want, r.lower, r.upper);
        if (dist > tol) {
          cell_ok = false;
          out.fail(cell_name(kind, m, sigma) + ": published " + fmt(want) + " measured [" + fmt(r.lower) + ", " +
                   fmt(r.upper) + "] off by " + fmt_short(100.0 * dist) + "%");
        }
      }
      if (hi > 3.0 * lo) {
        cell_ok = false;
        out.fail(std::string(nfw::kind_name(kinds.front())) + " group m=" + std::to_string(m) +
                 " sigma=" + fmt_short(sigma) + ": spread " + fmt_short(hi / lo) + "x exceeds 3x");
      }
      ++cells;
      if (cell_ok) ++ok_cells;
    }
  }
}

// Second figure: grouped families.
Outcome criterion2() {
  Outcome out;
  int cells = 0;
  int ok_cells = 0;
  check_group(out, {Kind::Sinh, Kind::Exp, Kind::Cosh}, nfw::published::kSinhGroup, 0.05, cells, ok_cells);
  check_group(out, {Kind::ModifiedSinh, Kind::ModifiedCosh, Kind::ModifiedExp}, nfw::published::kModifiedGroup, 0.10,
              cells, ok_cells);
  out.summary = std::to_string(ok_cells) + "/" + std::to_string(cells) + " group cells consistent";
  return out;
}

// Measured upper estimate below every theorem bound.
Outcome criterion3() {
  Outcome out;
  std::vector<WindowKind> kinds = {WindowKind{Kind::BSpline}, WindowKind{Kind::Algebraic}, WindowKind{Kind::Bessel},
                                   WindowKind{Kind::Sinh}, WindowKind{Kind::ModifiedCosh}};
  for (double b : {1.5, 2.0, 2.5, 3.0, 4.0}) kinds.push_back(WindowKind{Kind::ModifiedBSpline, b});
  int checked = 0;
  int ok = 0;
  for (const auto& kind : kinds) {
    for (double sigma : nfw::published::kSigmas) {
      for (int m = 2; m <= 6; ++m) {
        nfw::BoundReport report;
        try {
          report = nfw::verify_bound(kind, m, sigma, 1024);
        } catch (const nfw::InvalidWindow&) {
          continue;
        }
        if (report.bound.proxy) continue;
        ++checked;
        if (report.ok) {
          ++ok;
        } else {
          out.fail(cell_name(kind, m, sigma) + ": measured " + fmt(report.measured.upper) + " > bound " +
                   fmt(report.bound.value));
        }
      }
    }
  }
  out.summary = std::to_string(ok) + "/" + std::to_string(checked) + " theorem cells dominated";
  return out;
}

// Aliasing and periodization forms agree.
Outcome criterion4() {
  Outcome out;
  int cells = 0;
  int agree = 0;
  double worst = 0.0;
  for (Kind k : nfw::kAllKinds) {
    const WindowKind kind{k, 2.5};
    for (int m = 2; m <= 4; ++m) {
      for (double sigma : nfw::published::kSigmas) {
        for (int N : {16, 64}) {
          std::optional<Window> w;
          try {
            w.emplace(make(kind, m, sigma, N));
          } catch (const nfw::InvalidWindow&) {
            continue;
          }
          ++cells;
          std::optional<double> alias;
          std::optional<double> period;
          try {
            alias = nfw::error_constant_aliasing(*w).value;
          } catch (const nfw::NonpositiveCoefficient&) {
          }
          try {
            period = nfw::error_constant_periodization(*w).value;
          } catch (const nfw::NonpositiveCoefficient&) {
          }
          if (!alias && !period) {
            ++agree;
            continue;
          }
          if (!alias || !period) {
            out.fail(cell_name(kind, m, sigma, N) + ": only one method reports a nonpositive coefficient");
            continue;
          }
          const double diff = std::abs(*alias - *period);
          const double big = std::max(*alias, *period);
          const bool tiny = big < 1e-9;
          const bool ok = tiny ? diff <= 1e-12 : diff <= 1e-3 * big;
          if (!tiny) worst = std::max(worst, diff / big);
          if (ok) {
            ++agree;
          } else {
            out.fail(cell_name(kind, m, sigma, N) + ": aliasing " + fmt(*alias) + " periodization " + fmt(*period));
          }
        }
      }
    }
  }
  out.summary = std::to_string(agree) + "/" + std::to_string(cells) + " cells agree, max relative difference " +
                fmt_short(worst);
  return out;
}

using LongComplex = std::complex<long double>;

std::vector<LongComplex> direct_forward(const nfw::TrigPolynomial& poly, const std::vector<double>& nodes) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::vector<LongComplex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    LongComplex sum = 0.0L;
    for (int k = -poly.N / 2; k < poly.N / 2; ++k) {
      const long double arg = two_pi * k * static_cast<long double>(nodes[j]);
      const Complex c = poly.coeff(k);
      sum += LongComplex(c.real(), c.imag()) * LongComplex(std::cos(arg), std::sin(arg));
    }
    out[j] = sum;
  }
  return out;
}

std::vector<LongComplex> direct_adjoint(const std::vector<Complex>& values, const std::vector<double>& nodes, int N) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::vector<LongComplex> out(static_cast<std::size_t>(N));
  for (int k = -N / 2; k < N / 2; ++k) {
    LongComplex sum = 0.0L;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const long double arg = two_pi * k * static_cast<long double>(nodes[j]);
      sum += LongComplex(values[j].real(), values[j].imag()) * LongComplex(std::cos(arg), std::sin(arg));
    }
    out[static_cast<std::size_t>(k + N / 2)] = sum;
  }
  return out;
}

double max_deviation(const std::vector<Complex>& fast, const std::vector<LongComplex>& exact) {
  double worst = 0.0;
  for (std::size_t i = 0; i < fast.size(); ++i) {
    const LongComplex d = LongComplex(fast[i].real(), fast[i].imag()) - exact[i];
    worst = std::max(worst, static_cast<double>(std::abs(d)));
  }
  return worst;
}

// Randomized forward and adjoint runs against the direct sums.
Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(20240501);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> node(-0.5, 0.5);
  std::map<std::tuple<int, int, double, int>, double> constants;
  const int runs = 400;
  int forward_ok = 0;
  int adjoint_ok = 0;
  double worst_ratio = 0.0;
  double worst_pure = 0.0;
  for (int run = 0; run < runs;) {
    const Kind k = nfw::kAllKinds[rng() % std::size(nfw::kAllKinds)];
    const WindowKind kind{k, 2.5};
    const int m = 2 + static_cast<int>(rng() % 4);
    const double sigma = nfw::published::kSigmas[rng() % 3];
    const int N = 16 << (rng() % 3);
    std::optional<Window> w;
    double e = 0.0;
    try {
      w.emplace(make(kind, m, sigma, N));
      const auto key = std::make_tuple(static_cast<int>(k), m, sigma, N);
      auto it = constants.find(key);
      if (it == constants.end()) it = constants.emplace(key, nfw::error_constant_periodization(*w).upper).first;
      e = it->second;
    } catch (const nfw::InvalidWindow&) {
      continue;
    } catch (const nfw::NonpositiveCoefficient&) {
      continue;
    }
    ++run;
    const int M = 1 + static_cast<int>(rng() % 128);
    nfw::NodeSet nodes;
    for (int j = 0; j < M; ++j) nodes.nodes.push_back(node(rng));
    const nfw::NfftPlan plan(*w, nodes);
    const double slack = plan.rounding_allowance();

    nfw::TrigPolynomial poly = nfw::TrigPolynomial::zeros(N);
    for (auto& c : poly.coeffs) c = Complex(normal(rng), normal(rng));
    const double norm_a = nfw::wiener_norm(poly);
    const double forward_error = max_deviation(nfw::nfft_forward(plan, poly), direct_forward(poly, nodes.nodes));
    const double forward_budget = e * norm_a + slack * norm_a;
    worst_ratio = std::max(worst_ratio, forward_error / forward_budget);
    worst_pure = std::max(worst_pure, forward_error / (e * norm_a));
    if (forward_error <= forward_budget) {
      ++forward_ok;
    } else {
      out.fail("forward " + cell_name(kind, m, sigma, N) + " M=" + std::to_string(M) + ": error " +
               fmt(forward_error) + " > budget " + fmt(forward_budget));
    }

    std::vector<Complex> values(static_cast<std::size_t>(M));
    double norm_1 = 0.0;
    for (auto& v : values) {
      v = Complex(normal(rng), normal(rng));
      norm_1 += std::abs(v);
    }
    const double adjoint_error =
        max_deviation(nfw::nfft_adjoint(plan, values), direct_adjoint(values, nodes.nodes, N));
    const double adjoint_budget = e * norm_1 + slack * norm_1;
    worst_ratio = std::max(worst_ratio, adjoint_error / adjoint_budget);
    worst_pure = std::max(worst_pure, adjoint_error / (e * norm_1));
    if (adjoint_error <= adjoint_budget) {
      ++adjoint_ok;
    } else {
      out.fail("adjoint " + cell_name(kind, m, sigma, N) + " M=" + std::to_string(M) + ": error " +
               fmt(adjoint_error) + " > budget " + fmt(adjoint_budget));
    }
  }
  out.summary = std::to_string(forward_ok) + "/" + std::to_string(runs) + " forward and " +
                std::to_string(adjoint_ok) + "/" + std::to_string(runs) +
                " adjoint runs within budget, max error/budget " + fmt_short(worst_ratio) +
                ", max error/(e norm) " + fmt_short(worst_pure);
  return out;
}

double locate_zero(double nu, double guess) {
  double lo = guess - 0.05;
  double hi = guess + 0.05;
  double flo = nfw::specfun::bessel_j(nu, lo);
  if (flo * nfw::specfun::bessel_j(nu, hi) > 0.0) return NAN;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = nfw::specfun::bessel_j(nu, mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Special-function inequalities, B-spline anchors and Bessel zeros.
Outcome criterion6() {
  namespace sf = nfw::specfun;
  Outcome out;
  int suites = 0;

  const double kraenkel = std::sqrt(2.0 / kPi) + 1e-12;
  bool ok = true;
  for (double mu : {1.0, 2.5, 6.0, 9.0, 12.0}) {
    for (int i = 0; i <= 10000; ++i) {
      const double x = 0.01 * i;
      const double lhs = std::pow(std::abs(x * x - mu * mu + 0.25), 0.25) * std::abs(sf::bessel_j(mu, x));
      if (!(lhs < kraenkel)) {
        out.fail("Kraenkel bound fails at mu=" + fmt_short(mu) + " x=" + fmt_short(x) + ": " + fmt(lhs));
        ok = false;
        break;
      }
    }
  }
  suites += ok;

  ok = true;
  for (double mu : {0.5, 2.5}) {
    double prev = 0.0;
    for (int i = 0; i <= 9990; ++i) {
      const double x = 0.1 + 0.01 * i;
      const double f = std::sqrt(2.0 * kPi * x) * std::exp(-x) * sf::bessel_i(mu, x);
      if (f < prev - 1e-12 || !(f < 1.0 + 1e-12)) {
        out.fail("normalized I not increasing below 1 at mu=" + fmt_short(mu) + " x=" + fmt_short(x) + ": " + fmt(f));
        ok = false;
        break;
      }
      prev = f;
    }
  }
  suites += ok;

  ok = true;
  for (int m = 2; m <= 6; ++m) {
    for (double sigma : nfw::published::kSigmas) {
      const double beta = 2.0 * kPi * m * (1.0 - 1.0 / (2.0 * sigma));
      for (int i = 0; i < 1000; ++i) {
        const double x = beta * i / 999.0;
        const double y = std::sqrt(std::max(0.0, beta * beta - x * x));
        if (y * sf::bessel_j(1.0, x) > x * sf::bessel_i(1.0, y) + 1e-12) {
          out.fail("J1/I1 inequality fails at m=" + std::to_string(m) + " sigma=" + fmt_short(sigma) +
                   " x=" + fmt_short(x));
          ok = false;
        }
      }
    }
  }
  suites += ok;

  ok = true;
  const std::pair<int, double> anchors[] = {{2, 1.0},           {4, 2.0 / 3.0},   {6, 11.0 / 20.0},
                                            {8, 151.0 / 315.0}, {3, 3.0 / 4.0},   {5, 115.0 / 192.0}};
  for (const auto& [order, want] : anchors) {
    const double got = sf::cardinal_bspline(order, 0.0);
    if (std::abs(got - want) > 1e-14) {
      out.fail("M_" + std::to_string(order) + "(0) = " + fmt(got) + ", expected " + fmt(want));
      ok = false;
    }
  }
  suites += ok;

  ok = true;
  for (const auto& zero : nfw::published::kBesselZeros) {
    const double root = locate_zero(zero.nu, zero.value);
    if (!(std::abs(root - zero.value) <= 1e-6)) {
      out.fail("first zero of J_" + std::to_string(zero.nu) + " located at " + fmt(root) + ", tabulated " +
               fmt(zero.value));
      ok = false;
    }
  }
  suites += ok;

  out.summary = std::to_string(suites) + "/5 suites hold";
  return out;
}

// Rectangular-rule sum against the truncated aliasing series.
Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(7);
  const WindowKind kinds[] = {WindowKind{Kind::BSpline},   WindowKind{Kind::ModifiedBSpline, 2.5},
                              WindowKind{Kind::Triangular}, WindowKind{Kind::Algebraic},
                              WindowKind{Kind::Bessel},    WindowKind{Kind::ModifiedCosh}};
  const int m = 3;
  const double sigma = 1.5;
  const int N = 64;
  int checks = 0;
  int ok = 0;
  double worst = 0.0;
  for (const auto& kind : kinds) {
    const Window w = make(kind, m, sigma, N);
    const auto profile = nfw::certified_decay_profile(w);
    if (!profile) {
      out.fail(nfw::describe(kind) + ": no certified decay profile");
      continue;
    }
    const int L = w.grid_length();
    const double a = w.support();
    const double K = a * L;
    int R = 4096;
    while (K * (R - 0.5) < profile->w0) R *= 2;
    const double mu = profile->mu;
    const double tail = a * profile->c2 * std::pow(K, -mu) * 2.0 * std::pow(R - 0.5, 1.0 - mu) / (mu - 1.0);
    std::uniform_int_distribution<int> pick_n(-N / 2, N / 2 - 1);
    std::uniform_real_distribution<double> pick_x(-0.5, 0.5);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = pick_n(rng);
      const double x = pick_x(rng);
      Complex lhs = 0.0;
      for (int l = 0; l < L; ++l) {
        const double phase = -2.0 * kPi * static_cast<double>((static_cast<long long>(n) * l) % L) / L;
        lhs += std::polar(w.periodization_eval(x + static_cast<double>(l) / L), phase);
      }
      lhs /= static_cast<double>(L);
      Complex rhs = 0.0;
      for (int r = -R; r <= R; ++r) {
        const double v = n + static_cast<double>(r) * L;
        const double frac = v * x - std::floor(v * x);
        rhs += std::polar(w.fourier_transform(v), 2.0 * kPi * frac);
      }
      const double diff = std::abs(lhs - rhs);
      const double allowed = tail + 1e-12;
      worst = std::max(worst, diff / allowed);
      ++checks;
      if (diff <= allowed) {
        ++ok;
      } else {
        out.fail(nfw::describe(kind) + " n=" + std::to_string(n) + " x=" + fmt(x) + ": difference " + fmt(diff) +
                 " > " + fmt(allowed));
      }
    }
  }
  out.summary = std::to_string(ok) + "/" + std::to_string(checks) + " identity checks within tail, max ratio " +
                fmt_short(worst);
  return out;
}

// c_n(phi~) = 2 int_0^a phi(t) cos(2 pi n t) dt by tanh-sinh quadrature on panels.
double coefficient_by_quadrature(const Window& w, int n, boost::math::quadrature::tanh_sinh<double>& rule) {
  const double a = w.support();
  int panels = 4;
  if (w.is_bspline_family()) panels = static_cast<int>(std::lround(2.0 * w.bspline_scale()));
  const double width = a / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * width;
    const double hi = p + 1 == panels ? a : (p + 1) * width;
    sum += rule.integrate([&](double t) { return w.eval(t) * std::cos(2.0 * kPi * n * t); }, lo, hi, 1e-15);
  }
  return 2.0 * sum;
}

// Pass-band coefficients of the approximant equal those of the polynomial.
Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  boost::math::quadrature::tanh_sinh<double> rule;
  const int N = 32;
  const int m = 3;
  const double sigma = 2.0;
  int kinds_ok = 0;
  double worst_in = 0.0;
  double worst_out = 0.0;
  for (Kind k : nfw::kAllKinds) {
    const WindowKind kind{k, 2.0};
    const Window w = make(kind, m, sigma, N);
    nfw::TrigPolynomial poly = nfw::TrigPolynomial::zeros(N);
    for (auto& c : poly.coeffs) c = Complex(normal(rng), normal(rng));
    std::vector<Complex> grid;
    try {
      grid = nfw::nfft_grid(w, poly);
    } catch (const nfw::NonpositiveCoefficient& e) {
      out.fail(nfw::describe(kind) + ": " + e.what());
      continue;
    }
    const int L = w.grid_length();
    double in_band = 0.0;
    double off_band = 0.0;
    double scale = 0.0;
    for (int n = -L / 2; n < L / 2; ++n) {
      Complex dft = 0.0;
      for (int l = 0; l < L; ++l) {
        const double phase = -2.0 * kPi * static_cast<double>((static_cast<long long>(n) * l) % L) / L;
        dft += grid[static_cast<std::size_t>(l)] * std::polar(1.0, phase);
      }
      scale = std::max(scale, std::abs(dft));
      if (n >= -N / 2 && n < N / 2) {
        const Complex cs = dft * coefficient_by_quadrature(w, n, rule);
        in_band = std::max(in_band, std::abs(cs - poly.coeff(n)));
      } else {
        off_band = std::max(off_band, std::abs(dft));
      }
    }
    off_band /= scale;
    worst_in = std::max(worst_in, in_band);
    worst_out = std::max(worst_out, off_band);
    const bool ok = in_band <= 1e-10 && off_band <= 1e-12;
    if (ok) {
      ++kinds_ok;
    } else {
      out.fail(nfw::describe(kind) + ": pass-band deviation " + fmt(in_band) + ", relative off-band residue " +
               fmt(off_band));
    }
  }
  out.summary = std::to_string(kinds_ok) + "/" + std::to_string(std::size(nfw::kAllKinds)) +
                " kinds exact, max pass-band deviation " + fmt_short(worst_in) + ", max off-band residue " +
                fmt_short(worst_out);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for the nfw library"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8};
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome result = criteria[i]();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s (%s; %.1f s)\n", i + 1, result.pass ? "PASS" : "FAIL", result.summary.c_str(),
                seconds);
    for (const auto& note : result.notes) std::printf("  note: %s\n", note.c_str());
    for (const auto& detail : result.details) std::printf("  %s\n", detail.c_str());
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}
