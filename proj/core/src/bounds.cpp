#include <cmath>
#include <numbers>

#include "nfw/analysis.hpp"
#include "nfw/specfun.hpp"

namespace nfw {

namespace {

constexpr double kPi = std::numbers::pi;

double exponent_term(int m, double sigma) {
  return std::exp(-2.0 * kPi * m * std::sqrt(1.0 - 1.0 / sigma));
}

double mcosh_argument(int m, double sigma) { return 2.0 * kPi * m * std::sqrt(1.0 - 1.0 / sigma); }

void require_range(const WindowKind& kind, int m, double sigma) {
  if (m < 2) throw InvalidWindow("bound: m must be >= 2");
  if (!(sigma > 1.0)) throw InvalidWindow("bound: sigma must be > 1");
  switch (kind.tag) {
    case Kind::Algebraic:
      if (!(sigma > kPi / 3.0)) throw InvalidWindow("algebraic bound requires sigma > pi/3");
      break;
    case Kind::Bessel:
    case Kind::Sinh:
    case Kind::Exp:
    case Kind::Cosh:
    case Kind::ModifiedCosh:
    case Kind::ModifiedExp:
    case Kind::ModifiedSinh:
      if (sigma < 1.25 || sigma > 2.0) {
        throw InvalidWindow(std::string(kind_name(kind.tag)) + " bound requires sigma in [5/4, 2]");
      }
      break;
    case Kind::Triangular:
      throw InvalidWindow("no theoretical bound for the triangular window");
    default:
      break;
  }
}

}  // namespace

double kaiser_bessel_reference(int m, double sigma) {
  return 4.0 * std::pow(m, 1.5) * exponent_term(m, sigma);
}

double mcosh_bound_minus_half(int m, double sigma) {
  return 5.25 / (specfun::bessel_i(0.0, mcosh_argument(m, sigma)) - 0.5);
}

BoundInfo theoretical_bound(const WindowKind& kind, int m, double sigma) {
  require_range(kind, m, sigma);
  BoundInfo info;
  info.source = kind.tag;
  switch (kind.tag) {
    case Kind::BSpline:
      info.value = 4.0 * m / (2.0 * m - 1.0) * std::pow(2.0 * sigma - 1.0, -2.0 * m);
      break;
    case Kind::ModifiedBSpline: {
      const double b = kind.b;
      info.value = 4.0 * b / (2.0 * b - 1.0) * std::pow(2.0 * sigma * b - 1.0, -2.0 * b);
      break;
    }
    case Kind::Algebraic: {
      const double j = specfun::bessel_j(3.0 * m, kPi * m / sigma);
      if (!(j > 0.0)) throw InvalidWindow("algebraic bound: J_{3m}(pi m/sigma) must be positive");
      info.value = 3.0 * std::sqrt(sigma) / (std::sqrt(kPi * m) * j) *
                   (1.0 + (2.0 * sigma - 1.0) / ((6.0 * m - 1.0) * sigma)) *
                   std::pow(2.0 * sigma - 1.0, -3.0 * m - 0.5);
      break;
    }
    case Kind::Bessel:
      info.value = (50.0 * m * m * m + 7.0) * exponent_term(m, sigma);
      break;
    case Kind::Sinh:
    case Kind::Exp:
    case Kind::Cosh:
      info.value = (24.0 * std::pow(m, 1.5) + 3.0) * exponent_term(m, sigma);
      info.source = Kind::Sinh;
      info.proxy = kind.tag != Kind::Sinh;
      break;
    case Kind::ModifiedCosh:
    case Kind::ModifiedExp:
    case Kind::ModifiedSinh:
      info.value = 5.25 / (specfun::bessel_i(0.0, mcosh_argument(m, sigma)) + 0.5);
      info.source = Kind::ModifiedCosh;
      info.proxy = kind.tag != Kind::ModifiedCosh;
      break;
    case Kind::Triangular:
      break;
  }
  return info;
}

BoundReport verify_bound(const WindowKind& kind, int m, double sigma, int N, std::optional<double> beta,
                         int grid) {
  BoundReport report;
  report.bound = theoretical_bound(kind, m, sigma);
  const Window window(kind, make_params(kind, m, sigma, N, beta));
  report.measured = error_constant_periodization(window, grid);
  report.ok = report.measured.upper <= report.bound.value * (1.0 + 1e-9);
  return report;
}

}  // namespace nfw
