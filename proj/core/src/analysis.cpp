#include "nfw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "nfw/specfun.hpp"
#include "nfw/transform.hpp"

namespace nfw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;
constexpr double kRefineTol = 1e-12;
constexpr int kRefineCount = 3;

// Maximizes f on [lo, hi]; returns (argmax, max).
template <class F>
std::pair<double, double> golden_max(const F& f, double lo, double hi) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kRefineTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Indices of the largest circular local maxima, largest first.
std::vector<std::size_t> top_local_maxima(const std::vector<double>& v, std::size_t count) {
  const std::size_t n = v.size();
  std::vector<std::size_t> peaks;
  for (std::size_t g = 0; g < n; ++g) {
    const double prev = v[(g + n - 1) % n];
    const double next = v[(g + 1) % n];
    if (v[g] >= prev && v[g] >= next) peaks.push_back(g);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > count) peaks.resize(count);
  return peaks;
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

ErrorConstantResult make_result(const Window& window, Method method) {
  ErrorConstantResult r;
  r.kind = window.kind();
  r.m = window.params().m;
  r.sigma = window.params().sigma;
  r.N = window.params().N;
  r.beta = window.params().beta;
  r.method = method;
  return r;
}

// e^{2 pi i n j / L} with the exponent reduced modulo L.
Complex unit_root(std::int64_t n, std::int64_t j, std::int64_t L) {
  std::int64_t r = (n * j) % L;
  if (r < 0) r += L;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(L));
}

bool is_integer(double x) { return x == std::round(x); }

// Closed form of sum_{r != 0} e^{2 pi i r t}/(r + c) for t in (0, 1), 0 < c < 1;
// t = 0 stands for t -> 0+.
Complex jump_series(double c, double t) {
  return kPi / std::sin(kPi * c) * std::polar(1.0, kPi * c * (1.0 - 2.0 * t)) - 1.0 / c;
}

}  // namespace

std::string_view method_name(Method method) {
  return method == Method::Aliasing ? "aliasing" : "periodization";
}

double tail_bound(double u, double mu, double scale) {
  if (!(std::abs(u) < 1.0)) throw std::invalid_argument("tail_bound: requires |u| < 1");
  if (!(mu > 1.0)) throw std::invalid_argument("tail_bound: requires mu > 1");
  return scale * (2.0 / (mu - 1.0)) * std::pow(1.0 - std::abs(u), 1.0 - mu);
}

double asymptotic_exponent(const Window& window) {
  const auto& p = window.params();
  switch (window.kind().tag) {
    case Kind::BSpline:
    case Kind::ModifiedBSpline:
    case Kind::Triangular:
      return window.bspline_order();
    case Kind::Algebraic:
      return p.beta + 0.5;
    case Kind::Bessel:
      return 3.0;
    case Kind::Cosh:
    case Kind::ModifiedSinh:
      return 2.0;
    case Kind::Sinh:
    case Kind::Exp:
    case Kind::ModifiedCosh:
    case Kind::ModifiedExp:
      return 1.5;
  }
  return 1.5;
}

std::optional<DecayProfile> certified_decay_profile(const Window& window) {
  const auto& p = window.params();
  const double beta = p.beta;
  const double band = p.m * (1.0 - 1.0 / (2.0 * p.sigma));
  DecayProfile d;
  switch (window.kind().tag) {
    case Kind::BSpline:
    case Kind::ModifiedBSpline:
    case Kind::Triangular: {
      const int order = window.bspline_order();
      const double b = window.bspline_scale();
      const double peak = specfun::cardinal_bspline(order, 0.0);
      d.mu = order;
      d.c2 = std::pow(b, order - 1) / (std::pow(kPi, order) * peak);
      d.w0 = 0.0;
      d.c1 = d.c2 * std::pow(band, -d.mu);
      return d;
    }
    case Kind::Algebraic: {
      // |J_beta(x)| <= sqrt(2/pi) (x^2 - beta^2)^{-1/4} with x >= 2 beta.
      d.mu = beta + 0.5;
      d.c2 = std::sqrt(kPi) * std::exp(std::lgamma(beta + 0.5)) * std::pow(kPi, -beta) *
             std::sqrt(2.0 / kPi) * std::pow(4.0 / 3.0, 0.25) / std::sqrt(2.0 * kPi);
      d.w0 = beta / kPi;
      d.c1 = d.c2 * std::pow(std::max(band, d.w0), -d.mu);
      return d;
    }
    case Kind::Bessel: {
      // |j_2(y)| <= y^-1 (1 - 6/y^2)^{-1/4}, y^2 = z^2 - beta^2, z >= 2 beta.
      const double z0 = 2.0 * beta;
      const double y0sq = z0 * z0 - beta * beta;
      if (y0sq <= 6.0) return std::nullopt;
      d.mu = 3.0;
      d.c2 = 2.0 * beta * beta / specfun::bessel_i(2.0, beta) * std::pow(1.0 - 6.0 / y0sq, -0.25) *
             std::pow(1.0 - beta * beta / (z0 * z0), -1.5) / std::pow(2.0 * kPi, 3.0);
      d.w0 = z0 / (2.0 * kPi);
      d.c1 = d.c2 * std::pow(std::max(band, d.w0), -d.mu);
      return d;
    }
    case Kind::ModifiedCosh: {
      // |J_0(y) - J_0(z)| <= (z - y) max |J_1| with the J_1 envelope at y.
      const double z0 = 2.0 * beta;
      const double kappa = 1.0 - (beta * beta + 0.75) / (z0 * z0);
      if (kappa <= 0.0) return std::nullopt;
      const double cm1 = 2.0 * std::sinh(0.5 * beta) * std::sinh(0.5 * beta);
      d.mu = 1.5;
      d.c2 = kPi / cm1 * beta * beta * std::sqrt(2.0 / kPi) * std::pow(kappa, -0.25) *
             std::pow(2.0 * kPi, -1.5);
      d.w0 = z0 / (2.0 * kPi);
      d.c1 = d.c2 * std::pow(std::max(band, d.w0), -d.mu);
      return d;
    }
    default:
      return std::nullopt;
  }
}

DecayProfile published_decay_profile(const WindowKind& kind, int m, double sigma, double beta) {
  const double shrink = 1.0 - 1.0 / (2.0 * sigma);
  DecayProfile d;
  switch (kind.tag) {
    case Kind::BSpline:
    case Kind::ModifiedBSpline: {
      const double b = kind.tag == Kind::BSpline ? m : kind.b;
      const int order = static_cast<int>(std::lround(2.0 * b));
      const double peak = specfun::cardinal_bspline(order, 0.0);
      d.mu = order;
      d.c2 = std::pow(b, order - 1) / (std::pow(kPi, order) * peak);
      d.c1 = d.c2 * std::pow(m * shrink, -d.mu);
      return d;
    }
    case Kind::Algebraic: {
      d.mu = beta + 0.5;
      d.c2 = 3.0 * std::tgamma(2.0 * beta + 1.0) /
             (std::pow(2.0, 1.5) * std::pow(4.0, beta) * std::tgamma(beta + 1.0) *
              std::pow(kPi, beta - 0.5));
      d.c1 = d.c2 * std::pow(m, -beta - 0.5) * std::pow(shrink, 1.0 - d.mu);
      return d;
    }
    case Kind::Bessel: {
      const double i2 = specfun::bessel_i(2.0, beta);
      d.mu = 3.0;
      d.c1 = 2.0 * beta * beta / (15.0 * i2);
      d.c2 = m * m * std::pow(2.0 * sigma + 1.0, 3.0) / (32.0 * sigma * std::sqrt(kPi * sigma) * i2) *
             shrink * shrink;
      return d;
    }
    case Kind::ModifiedCosh: {
      const double cm1 = 2.0 * std::sinh(0.5 * beta) * std::sinh(0.5 * beta);
      d.mu = 2.0;
      d.c1 = 3.0 * kPi / (2.0 * cm1);
      d.c2 = 3.0 * kPi * m * m * shrink * shrink / (2.0 * cm1);
      return d;
    }
    default:
      throw std::invalid_argument("published_decay_profile: no published profile for " +
                                  std::string(kind_name(kind.tag)));
  }
}

double general_bound_from_profile(const DecayProfile& profile, int m, double sigma,
                                  double ft_half_band) {
  if (!(ft_half_band > 0.0)) {
    throw std::invalid_argument("general_bound_from_profile: phi_hat_0(m/(2 sigma)) must be positive");
  }
  if (!(profile.mu > 1.0)) throw std::invalid_argument("general_bound_from_profile: mu must be > 1");
  const double shrink = 1.0 - 1.0 / (2.0 * sigma);
  const double tail = 2.0 * profile.c2 / ((profile.mu - 1.0) * std::pow(m, profile.mu)) *
                      std::pow(shrink, 1.0 - profile.mu);
  return (2.0 * profile.c1 + tail) / ft_half_band;
}

ErrorConstantResult error_constant_periodization(const Window& window, int grid) {
  if (grid < 16) throw std::invalid_argument("periodization grid must be >= 16");
  const auto& p = window.params();
  const int half = p.N / 2;
  const int L = window.grid_length();
  const double K = window.grid_half_width();
  const int jlo = -static_cast<int>(std::ceil(K));
  const int jhi = static_cast<int>(std::floor(K)) + 1;
  const auto nj = static_cast<std::size_t>(jhi - jlo + 1);
  const auto G = static_cast<std::size_t>(grid);

  std::vector<double> table(G * nj);
  for (std::size_t g = 0; g < G; ++g) {
    const double t = static_cast<double>(g) / grid;
    for (int j = jlo; j <= jhi; ++j) {
      table[g * nj + static_cast<std::size_t>(j - jlo)] = window.eval((t - j) / L);
    }
  }
  // One-sided limits at t = 0 for windows with a jump at the support edge.
  const double J = window.edge_limit();
  const bool jump = J != 0.0 && is_integer(K);
  std::vector<double> right(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(nj));
  std::vector<double> left = right;
  if (jump) {
    const auto kk = static_cast<int>(std::lround(K));
    right[static_cast<std::size_t>(kk - jlo)] = J;
    right[static_cast<std::size_t>(-kk - jlo)] = 0.0;
    left[static_cast<std::size_t>(kk - jlo)] = 0.0;
    left[static_cast<std::size_t>(-kk - jlo)] = J;
  }

  std::vector<double> cn(static_cast<std::size_t>(half) + 1);
  const QuadratureFt quad(window, half);
  quad.progression(0.0, 1.0, cn.size(), cn.data());
  for (int n = 0; n <= half; ++n) {
    const double c = cn[static_cast<std::size_t>(n)];
    if (!(c > 1e-13 * cn[0])) throw NonpositiveCoefficient(n, c);
  }

  ErrorConstantResult result = make_result(window, Method::Periodization);
  result.grid = grid;
  std::vector<Complex> phase(nj);
  std::vector<double> values(G);
  double grid_best = -1.0;
  double best = -1.0;
  for (int n = 0; n <= half; ++n) {
    const double inv = 1.0 / (L * cn[static_cast<std::size_t>(n)]);
    for (int j = jlo; j <= jhi; ++j) phase[static_cast<std::size_t>(j - jlo)] = unit_root(n, j, L);
    auto row_error = [&](const double* w, std::size_t g) {
      Complex s(0.0, 0.0);
      for (std::size_t i = 0; i < nj; ++i) s += phase[i] * w[i];
      const double angle = -2.0 * kPi * n * (static_cast<double>(g) / grid) / L;
      return std::abs(s * std::polar(inv, angle) - 1.0);
    };
    for (std::size_t g = 0; g < G; ++g) values[g] = row_error(&table[g * nj], g);
    values[0] = std::max(row_error(right.data(), 0), row_error(left.data(), 0));

    const auto peaks = top_local_maxima(values, kRefineCount);
    if (values[peaks.front()] > grid_best) {
      grid_best = values[peaks.front()];
      if (grid_best > best) {
        best = grid_best;
        result.argmax_n = n;
        result.argmax_t = static_cast<double>(peaks.front()) / grid;
      }
    }
    auto error_at = [&](double t) {
      const auto lo = static_cast<std::int64_t>(std::ceil(t - K));
      const auto hi = static_cast<std::int64_t>(std::floor(t + K));
      Complex s(0.0, 0.0);
      for (std::int64_t j = lo; j <= hi; ++j) s += unit_root(n, j, L) * window.eval((t - j) / L);
      return std::abs(s * std::polar(inv, -2.0 * kPi * n * t / L) - 1.0);
    };
    for (std::size_t g : peaks) {
      const double t0 = static_cast<double>(g) / grid;
      const double h = 1.0 / grid;
      const auto [t, v] = golden_max(error_at, t0 - h, t0 + h);
      if (v > best) {
        best = v;
        result.argmax_n = n;
        result.argmax_t = t - std::floor(t);
      }
    }
  }
  result.lower = grid_best;
  result.upper = best;
  result.value = best;
  return result;
}

ErrorConstantResult error_constant_aliasing(const Window& window, const AliasingOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("aliasing tolerance must be positive");
  if (options.grid < 16) throw std::invalid_argument("aliasing grid must be >= 16");
  const auto& p = window.params();
  const int half = p.N / 2;
  const int L = window.grid_length();
  const double K = window.grid_half_width();
  const double a = window.support();
  const bool analytic = has_analytic_ft(window.kind().tag);
  const int cap = options.rmax_cap > 0 ? options.rmax_cap : (analytic ? 4096 : 256);
  const double mu = asymptotic_exponent(window);
  const auto certified = certified_decay_profile(window);
  const double J = window.edge_limit();
  const bool jump = J != 0.0;

  std::vector<double> phi_n(static_cast<std::size_t>(half) + 1);
  for (int n = 0; n <= half; ++n) phi_n[static_cast<std::size_t>(n)] = window.fourier_coefficient(n);

  ErrorConstantResult result = make_result(window, Method::Aliasing);
  // Error magnitude at t = 0 per n and truncation level, for extrapolation.
  std::vector<std::vector<double>> history;
  std::vector<double> at_zero(phi_n.size());
  std::vector<double> sup(phi_n.size());
  std::vector<double> tail(phi_n.size());
  std::vector<double> where(phi_n.size());
  int R = 8;
  bool converged = false;
  for (;; R *= 2) {
    const std::size_t G = next_power_of_two(std::max<std::size_t>(options.grid, 16 * static_cast<std::size_t>(R)));
    const Fft fft(G);
    std::optional<QuadratureFt> quad;
    if (!analytic) quad.emplace(window, static_cast<double>(R) * L + half);

    std::vector<double> coeff(2 * static_cast<std::size_t>(R) + 1);
    std::vector<Complex> buf(G);
    std::vector<double> values(G);
    double level_best = 0.0;
    for (int n = 0; n <= half; ++n) {
      const double phi = phi_n[static_cast<std::size_t>(n)];
      const double u = static_cast<double>(n) / L;
      if (quad) {
        quad->progression(n - static_cast<double>(R) * L, L, coeff.size(), coeff.data());
      } else {
        for (int r = -R; r <= R; ++r) {
          coeff[static_cast<std::size_t>(r + R)] = window.fourier_transform(n + static_cast<double>(r) * L);
        }
      }
      // Jump part J sin(2 pi n a)/(pi (n + rL) phi_hat(n)) is summed in closed form.
      const double jc = jump && n > 0 ? J * std::sin(2.0 * kPi * n * a) / (kPi * L * phi) : 0.0;
      std::fill(buf.begin(), buf.end(), Complex(0.0, 0.0));
      for (int r = -R; r <= R; ++r) {
        if (r == 0) continue;
        double& c = coeff[static_cast<std::size_t>(r + R)];
        c = c / phi - (jc != 0.0 ? jc / (r + u) : 0.0);
        buf[static_cast<std::size_t>((r + static_cast<std::int64_t>(G)) % static_cast<std::int64_t>(G))] = c;
      }
      coeff[static_cast<std::size_t>(R)] = 0.0;
      fft.inverse(buf.data());

      auto jump_at = [&](double t) {
        if (jc == 0.0) return Complex(0.0, 0.0);
        return jc * jump_series(u, t - std::floor(t));
      };
      for (std::size_t g = 0; g < G; ++g) {
        values[g] = std::abs(buf[g] + jump_at(static_cast<double>(g) / G));
      }
      if (jc != 0.0) values[0] = std::max(values[0], std::abs(buf[0] + jc * jump_series(u, 1.0)));

      at_zero[static_cast<std::size_t>(n)] = values[0];
      const auto peaks = top_local_maxima(values, kRefineCount);
      double s = values[peaks.front()];
      double s_t = static_cast<double>(peaks.front()) / G;
      if (s >= 0.5 * level_best) {
        auto sum_at = [&](double t) {
          const Complex z = std::polar(1.0, 2.0 * kPi * t);
          Complex zr(1.0, 0.0);
          Complex total(0.0, 0.0);
          for (int r = 1; r <= R; ++r) {
            zr *= z;
            total += coeff[static_cast<std::size_t>(R + r)] * zr +
                     coeff[static_cast<std::size_t>(R - r)] * std::conj(zr);
          }
          return std::abs(total + jump_at(t));
        };
        for (std::size_t g : peaks) {
          const double t0 = static_cast<double>(g) / G;
          const double h = 1.0 / static_cast<double>(G);
          const auto [t, v] = golden_max(sum_at, t0 - h, t0 + h);
          if (v > s) {
            s = v;
            s_t = t - std::floor(t);
          }
        }
      }
      level_best = std::max(level_best, s);
      sup[static_cast<std::size_t>(n)] = s;
      where[static_cast<std::size_t>(n)] = s_t;

      double bound = std::numeric_limits<double>::infinity();
      if (certified && !jump && K * (R + 1 - u) >= certified->w0) {
        const double scale = certified->c2 * std::pow(K, -certified->mu) / (phi / a);
        bound = tail_bound(u / R, certified->mu, scale * std::pow(R, 1.0 - certified->mu)) ;
      } else {
        double envelope = 0.0;
        for (int r = R / 2 + 1; r <= R; ++r) {
          envelope = std::max(envelope, std::abs(coeff[static_cast<std::size_t>(R + r)]) * std::pow(r + u, mu));
          envelope = std::max(envelope, std::abs(coeff[static_cast<std::size_t>(R - r)]) * std::pow(r - u, mu));
        }
        bound = tail_bound(u / R, mu, 10.0 * envelope * std::pow(R, 1.0 - mu));
      }
      tail[static_cast<std::size_t>(n)] = bound;
      if (s > result.lower || n == 0) {
        result.argmax_n = n;
        result.argmax_t = s_t;
      }
      if (n == 0 || s > result.lower) result.lower = s;
    }
    history.push_back(at_zero);
    const double worst_tail = *std::max_element(tail.begin(), tail.end());
    result.r_max = R;
    result.grid = static_cast<int>(G);
    result.tail_bound = worst_tail;
    if (worst_tail <= options.tol * std::max(level_best, options.tol)) {
      converged = true;
      break;
    }
    if (2 * R > cap) break;
  }

  result.converged = converged;
  result.upper = 0.0;
  result.value = 0.0;
  // When the sup sits at the cusp t = 0, the truncation error of the value
  // there expands in R^{1-mu-k/2}, k = 0, 1, 2, ... (edge expansion in powers
  // of sqrt(1-u^2)); eliminate up to four terms. Away from it the error
  // oscillates and is small.
  const std::size_t stages = std::min<std::size_t>(4, history.size() - 1);
  for (std::size_t n = 0; n < sup.size(); ++n) {
    const double hi = sup[n] + tail[n];
    result.upper = std::max(result.upper, hi);
    double est = sup[n];
    const double cusp_distance = std::min(where[n], 1.0 - where[n]);
    if (!converged && stages > 0 && cusp_distance * R <= 2.0) {
      std::vector<double> t(stages + 1);
      for (std::size_t i = 0; i <= stages; ++i) t[i] = history[history.size() - 1 - stages + i][n];
      for (std::size_t s = 0; s < stages; ++s) {
        const double factor = std::pow(2.0, mu - 1.0 + 0.5 * static_cast<double>(s)) - 1.0;
        for (std::size_t i = stages; i > s; --i) t[i] = t[i] + (t[i] - t[i - 1]) / factor;
      }
      est = std::clamp(t[stages], sup[n] - tail[n], hi);
    }
    result.value = std::max(result.value, est);
  }
  return result;
}

}  // namespace nfw
