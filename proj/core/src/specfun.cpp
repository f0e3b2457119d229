#include "nfw/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nfw::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

void require_order_and_argument(double mu, double x, const char* name) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw std::domain_error(std::string(name) + ": order must be finite and >= 0");
  }
  if (!(x >= 0.0) || std::isnan(x)) {
    throw std::domain_error(std::string(name) + ": argument must be >= 0");
  }
}

// sum_k (-q)^k / (k! (mu+1)_k), times `lead`.
double j_series(double mu, double x, double lead) {
  const double q = 0.25 * x * x;
  double term = lead;
  double sum = term;
  double peak = std::abs(term);
  for (int k = 1; k < 1000; ++k) {
    term *= -q / (k * (mu + k));
    sum += term;
    peak = std::max(peak, std::abs(term));
    if (k * (mu + k) > q && std::abs(term) <= kEps * peak) break;
  }
  return sum;
}

// Hankel expansion, valid for x large compared with mu^2.
double j_hankel(double nu, double x) {
  const double mu4 = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double t = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = t * (mu4 - odd * odd) / (8.0 * k * x);
    if (std::abs(next) > std::abs(t) && k > 2) break;
    t = next;
    switch (k % 4) {
      case 1: q += t; break;
      case 2: p -= t; break;
      case 3: q -= t; break;
      default: p += t; break;
    }
    if (std::abs(t) < kEps) break;
  }
  // cos(x - phase) expanded so that x is reduced by the library at full precision.
  const double phase = (0.5 * nu + 0.25) * kPi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cp = std::cos(phase);
  const double sp = std::sin(phase);
  const double cos_chi = cx * cp + sx * sp;
  const double sin_chi = sx * cp - cx * sp;
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

// Miller backward recurrence normalized by
// (x/2)^f = sum_j (f + 2j) Gamma(f + j) / j! * J_{f+2j}(x).
double j_miller(double nu, double x) {
  const int n = static_cast<int>(std::floor(nu));
  const double f = nu - n;
  const double big = std::max(static_cast<double>(n), x);
  int kstart = static_cast<int>(big + 20.0 + std::sqrt(60.0 * big));
  kstart += kstart % 2;

  int j = kstart / 2;
  double gj = std::exp(std::lgamma(f + j) - std::lgamma(j + 1.0));
  double p_next = 0.0;
  double p = 1e-280;
  double sum = 0.0;
  double target = 0.0;
  for (int k = kstart; k >= 0; --k) {
    if (k == n) target = p;
    if (k % 2 == 0) {
      const int jj = k / 2;
      const double weight = jj == 0 ? std::tgamma(f + 1.0) : (f + 2.0 * jj) * gj;
      sum += weight * p;
      if (jj >= 2) gj *= jj / (f + jj - 1.0);
    }
    if (k > 0) {
      const double prev = 2.0 * (f + k) / x * p - p_next;
      p_next = p;
      p = prev;
      if (std::abs(p) > 1e250) {
        p *= 1e-250;
        p_next *= 1e-250;
        sum *= 1e-250;
        target *= 1e-250;
      }
    }
  }
  return target / sum * std::pow(0.5 * x, f);
}

double i_series(double mu, double x) {
  const double q = 0.25 * x * x;
  double term = std::exp(mu * std::log(0.5 * x) - std::lgamma(mu + 1.0));
  double sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (k * (mu + k));
    sum += term;
    if (k * (mu + k) > q && term <= kEps * sum) break;
  }
  return sum;
}

double i_asymptotic(double nu, double x) {
  const double mu4 = 4.0 * nu * nu;
  double sum = 1.0;
  double t = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -t * (mu4 - odd * odd) / (8.0 * k * x);
    if (std::abs(next) > std::abs(t) && k > 2) break;
    t = next;
    sum += t;
    if (std::abs(t) < kEps * std::abs(sum)) break;
  }
  return std::exp(x) / std::sqrt(2.0 * kPi * x) * sum;
}

}  // namespace

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

double cardinal_bspline(int order, double x) {
  if (order < 1) throw std::invalid_argument("cardinal_bspline: order must be >= 1");
  const double half = 0.5 * order;
  const double ax = std::abs(x);
  if (order == 1) {
    if (ax < 0.5) return 1.0;
    return ax == 0.5 ? 0.5 : 0.0;
  }
  if (ax >= half) return 0.0;

  // vals[i] = M_k(x + (order - k)/2 - i), built from k = 1 up to k = order.
  std::vector<double> vals(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    const double z = std::abs(x + 0.5 * (order - 1) - i);
    vals[static_cast<std::size_t>(i)] = z < 0.5 ? 1.0 : (z == 0.5 ? 0.5 : 0.0);
  }
  for (int k = 2; k <= order; ++k) {
    for (int i = 0; i <= order - k; ++i) {
      const double z = x + 0.5 * (order - k) - i;
      const auto u = static_cast<std::size_t>(i);
      vals[u] = ((0.5 * k + z) * vals[u] + (0.5 * k - z) * vals[u + 1]) / (k - 1);
    }
  }
  return vals[0];
}

double bessel_j(double mu, double x) {
  require_order_and_argument(mu, x, "bessel_j");
  if (x == 0.0) return mu == 0.0 ? 1.0 : 0.0;
  if (std::isinf(x)) return 0.0;
  if (x <= 8.0 || x * x <= 4.0 * (mu + 1.0)) {
    const double lead = std::exp(mu * std::log(0.5 * x) - std::lgamma(mu + 1.0));
    return j_series(mu, x, lead);
  }
  if (x >= std::max(30.0, 2.0 * mu * mu)) return j_hankel(mu, x);
  return j_miller(mu, x);
}

double bessel_j_scaled(double mu, double x) {
  require_order_and_argument(mu, x, "bessel_j_scaled");
  if (x <= 8.0 || x * x <= 4.0 * (mu + 1.0)) {
    return j_series(mu, x, std::exp(-std::lgamma(mu + 1.0)));
  }
  return bessel_j(mu, x) * std::exp(-mu * std::log(0.5 * x));
}

double bessel_i(double mu, double x) {
  require_order_and_argument(mu, x, "bessel_i");
  if (x == 0.0) return mu == 0.0 ? 1.0 : 0.0;
  if (x > std::max(50.0, mu * mu)) return i_asymptotic(mu, x);
  return i_series(mu, x);
}

double spherical2_ratio(double w) {
  if (std::abs(w) < 1.0) {
    double term = 1.0 / 15.0;
    double sum = term;
    for (int k = 1; k < 60; ++k) {
      term *= w / (2.0 * k * (2.0 * k + 5.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  const double y = std::sqrt(std::abs(w));
  if (w > 0.0) return spherical_i2(y) / w;
  return spherical_j2(y) / (-w);
}

double spherical_j2(double x) {
  if (!(x >= 0.0)) throw std::domain_error("spherical_j2: argument must be >= 0");
  if (x < 1.0) return x * x * spherical2_ratio(-x * x);
  const double x2 = x * x;
  return (3.0 / (x2 * x) - 1.0 / x) * std::sin(x) - 3.0 / x2 * std::cos(x);
}

double spherical_i2(double x) {
  if (!(x >= 0.0)) throw std::domain_error("spherical_i2: argument must be >= 0");
  if (x < 1.0) return x * x * spherical2_ratio(x * x);
  const double x2 = x * x;
  return (3.0 / (x2 * x) + 1.0 / x) * std::sinh(x) - 3.0 / x2 * std::cosh(x);
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw std::domain_error("riemann_zeta: requires s > 1");
  // Euler-Maclaurin with cutoff K and Bernoulli terms B_2 .. B_12.
  constexpr int kCut = 20;
  constexpr double kBernoulli[] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                                   -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0};
  double sum = 0.0;
  for (int k = kCut - 1; k >= 1; --k) sum += std::pow(k, -s);
  const double kk = kCut;
  sum += std::pow(kk, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(kk, -s);
  double rising = s;      // s (s+1) ... (s + 2j - 2)
  double factorial = 2.0; // (2j)!
  for (int j = 1; j <= 6; ++j) {
    sum += kBernoulli[j - 1] / factorial * rising * std::pow(kk, 1.0 - s - 2.0 * j);
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

}  // namespace nfw::specfun
