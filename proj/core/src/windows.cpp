#include "nfw/windows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nfw/quadrature.hpp"
#include "nfw/specfun.hpp"

namespace nfw {

namespace {

constexpr double kPi = std::numbers::pi;

struct KindEntry {
  Kind kind;
  std::string_view name;
};

constexpr std::array<KindEntry, 11> kKindNames = {{
    {Kind::BSpline, "bspline"},
    {Kind::ModifiedBSpline, "mbspline"},
    {Kind::Triangular, "triangular"},
    {Kind::Algebraic, "algebraic"},
    {Kind::Bessel, "bessel"},
    {Kind::Sinh, "sinh"},
    {Kind::Exp, "exp"},
    {Kind::Cosh, "cosh"},
    {Kind::ModifiedCosh, "mcosh"},
    {Kind::ModifiedExp, "mexp"},
    {Kind::ModifiedSinh, "msinh"},
}};

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// 2 sinh^2(x/2) = cosh x - 1 without cancellation.
double cosh_minus_one(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

// Panel breakpoints in u for B-spline profiles: knots 1 - k/scale and 0.
std::vector<double> bspline_breakpoints(double scale) {
  std::vector<double> pts{0.0};
  for (int k = static_cast<int>(std::floor(scale)); k >= 0; --k) {
    const double u = 1.0 - k / scale;
    if (u > 1e-14) pts.push_back(u);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Appends u-nodes and weights times 2 phi_0 for the cosine transform of phi_0
// up to oscillation |w| <= wmax.
void build_quadrature(const Window& window, double wmax, std::vector<double>& u,
                      std::vector<double>& wf) {
  const GaussRule& rule = gauss_legendre_16();
  const std::size_t q = rule.nodes.size();
  u.clear();
  wf.clear();
  if (window.is_bspline_family()) {
    const std::vector<double> pts = bspline_breakpoints(window.bspline_scale());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double lo = pts[i];
      const double len = pts[i + 1] - lo;
      const int panels = std::max(1, static_cast<int>(std::ceil(len * std::max(wmax, 2.0))));
      const double h = len / panels;
      for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        for (std::size_t j = 0; j < q; ++j) {
          const double x = mid + 0.5 * h * rule.nodes[j];
          u.push_back(x);
          wf.push_back(0.5 * h * rule.weights[j] * window.profile(x));
        }
      }
    }
    return;
  }
  // u = sin(theta): the integrand phi_0(sin t) cos t is smooth on [0, pi/2].
  const int panels = static_cast<int>(std::ceil(1.5 * wmax)) + 8;
  const double h = 0.5 * kPi / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t j = 0; j < q; ++j) {
      const double t = mid + 0.5 * h * rule.nodes[j];
      u.push_back(std::sin(t));
      wf.push_back(0.5 * h * rule.weights[j] * window.theta_integrand(std::cos(t)));
    }
  }
}

}  // namespace

std::string_view kind_name(Kind kind) {
  for (const auto& e : kKindNames) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (const auto& e : kKindNames) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

bool has_analytic_ft(Kind kind) {
  switch (kind) {
    case Kind::BSpline:
    case Kind::ModifiedBSpline:
    case Kind::Triangular:
    case Kind::Algebraic:
    case Kind::Bessel:
    case Kind::ModifiedCosh:
      return true;
    default:
      return false;
  }
}

std::string describe(const WindowKind& kind) {
  std::string s(kind_name(kind.tag));
  if (kind.tag == Kind::ModifiedBSpline) s += "(b=" + format_number(kind.b) + ")";
  return s;
}

NonpositiveCoefficient::NonpositiveCoefficient(std::int64_t k, double value)
    : std::runtime_error("nonpositive Fourier coefficient c_" + std::to_string(k) + " = " +
                         format_number(value) + " inside the pass band"),
      k_(k),
      value_(value) {}

double default_beta(int m, double sigma) {
  return 2.0 * kPi * m * (1.0 - 1.0 / (2.0 * sigma));
}

WindowParams make_params(const WindowKind& kind, int m, double sigma, int N,
                         std::optional<double> beta_override) {
  WindowParams p;
  p.m = m;
  p.sigma = sigma;
  p.N = N;
  if (!std::isfinite(sigma) || !(sigma > 1.0)) throw InvalidWindow("sigma must be > 1");
  const double n1 = sigma * N;
  p.N1 = static_cast<int>(std::lround(n1));
  if (beta_override) {
    p.beta = *beta_override;
  } else if (kind.tag == Kind::Algebraic) {
    p.beta = 3.0 * m;
  } else {
    p.beta = default_beta(m, sigma);
  }
  validate(kind, p);
  return p;
}

void validate(const WindowKind& kind, const WindowParams& p) {
  if (p.N < 2 || p.N % 2 != 0) throw InvalidWindow("N must be even and >= 2");
  if (!std::isfinite(p.sigma) || !(p.sigma > 1.0)) throw InvalidWindow("sigma must be > 1");
  if (std::abs(p.sigma * p.N - p.N1) >= 1e-9) {
    throw InvalidWindow("sigma*N must be an even integer (sigma*N = " +
                        format_number(p.sigma * p.N) + ")");
  }
  if (p.N1 % 2 != 0) throw InvalidWindow("N1 = sigma*N must be even");
  if (p.m < 2) throw InvalidWindow("m must be >= 2");
  if (2 * p.m >= p.N1) {
    throw InvalidWindow("2m must be smaller than N1 (m = " + std::to_string(p.m) +
                        ", N1 = " + std::to_string(p.N1) + ")");
  }
  if (!std::isfinite(p.beta) || !(p.beta > 0.0)) throw InvalidWindow("beta must be > 0");
  if (kind.tag == Kind::Algebraic && p.beta < 0.5) {
    throw InvalidWindow("algebraic window needs beta >= 1/2");
  }
  if (kind.tag == Kind::ModifiedBSpline) {
    const double b = kind.b;
    const double twice = 2.0 * b;
    if (!(b >= 1.5 && b <= 8.0) || twice != std::round(twice)) {
      throw InvalidWindow("mbspline: b must be a half-integer in [3/2, 8]");
    }
    if (b == p.m) throw InvalidWindow("mbspline: b must differ from m");
    if (2.0 * p.sigma * b < 3.0) throw InvalidWindow("mbspline: requires 2 sigma b >= 3");
    if (!(p.m < 2.0 * p.sigma * b)) throw InvalidWindow("mbspline: requires m < 2 sigma b");
    const double l = p.N1 * b;
    if (l != std::round(l) || static_cast<long long>(l) % 2 != 0) {
      throw InvalidWindow("mbspline: N1*b must be an even integer");
    }
  }
}

std::optional<std::string> params_warning(const WindowParams& p) {
  if (8 * 2 * p.m > p.N1) {
    return "2m = " + std::to_string(2 * p.m) + " exceeds N1/8 = " + format_number(p.N1 / 8.0) +
           "; the window is wide relative to the grid";
  }
  return std::nullopt;
}

Window::Window(WindowKind kind, WindowParams params) : kind_(kind), params_(params) {
  validate(kind_, params_);
  support_ = static_cast<double>(params_.m) / params_.N1;
  grid_length_ = params_.N1;
  const double beta = params_.beta;
  switch (kind_.tag) {
    case Kind::BSpline:
      bspline_order_ = 2 * params_.m;
      bspline_scale_ = params_.m;
      break;
    case Kind::ModifiedBSpline:
      bspline_order_ = static_cast<int>(std::lround(2.0 * kind_.b));
      bspline_scale_ = kind_.b;
      grid_length_ = static_cast<int>(std::lround(params_.N1 * kind_.b));
      break;
    case Kind::Triangular:
      bspline_order_ = 2;
      bspline_scale_ = 1.0;
      break;
    case Kind::Algebraic:
      break;
    case Kind::Bessel:
      norm_ = 1.0 / specfun::bessel_i(2.0, beta);
      break;
    case Kind::Sinh:
    case Kind::ModifiedSinh:
      norm_ = 1.0 / std::sinh(beta);
      break;
    case Kind::Exp:
    case Kind::ModifiedExp:
      norm_ = 1.0 / std::expm1(beta);
      break;
    case Kind::Cosh:
    case Kind::ModifiedCosh:
      norm_ = 1.0 / cosh_minus_one(beta);
      break;
  }
  if (kind_.tag == Kind::ModifiedSinh || kind_.tag == Kind::ModifiedExp) {
    edge_limit_ = beta * norm_;
  }
  if (bspline_order_ > 0) bspline_peak_ = specfun::cardinal_bspline(bspline_order_, 0.0);
}

double Window::profile(double u) const {
  const double au = std::abs(u);
  if (au > 1.0) return 0.0;
  if (bspline_order_ > 0) {
    return specfun::cardinal_bspline(bspline_order_, bspline_scale_ * au) / bspline_peak_;
  }
  if (au == 1.0) return 0.5 * edge_limit_;
  const double s = std::sqrt((1.0 - au) * (1.0 + au));
  const double beta = params_.beta;
  switch (kind_.tag) {
    case Kind::Algebraic:
      return std::pow(s, 2.0 * beta - 1.0);
    case Kind::Bessel:
      return s * s * specfun::bessel_i(2.0, beta * s) * norm_;
    case Kind::Sinh:
      return std::sinh(beta * s) * norm_;
    case Kind::Exp:
      return std::expm1(beta * s) * norm_;
    case Kind::Cosh:
      return cosh_minus_one(beta * s) * norm_;
    case Kind::ModifiedCosh:
      return cosh_minus_one(beta * s) / s * norm_;
    case Kind::ModifiedExp:
      return std::expm1(beta * s) / s * norm_;
    case Kind::ModifiedSinh:
      return std::sinh(beta * s) / s * norm_;
    default:
      return 0.0;
  }
}

double Window::theta_integrand(double c) const {
  const double beta = params_.beta;
  switch (kind_.tag) {
    case Kind::Algebraic:
      return std::pow(c, 2.0 * beta);
    case Kind::Bessel:
      return c * c * c * specfun::bessel_i(2.0, beta * c) * norm_;
    case Kind::Sinh:
      return c * std::sinh(beta * c) * norm_;
    case Kind::Exp:
      return c * std::expm1(beta * c) * norm_;
    case Kind::Cosh:
      return c * cosh_minus_one(beta * c) * norm_;
    case Kind::ModifiedCosh:
      return cosh_minus_one(beta * c) * norm_;
    case Kind::ModifiedExp:
      return std::expm1(beta * c) * norm_;
    case Kind::ModifiedSinh:
      return std::sinh(beta * c) * norm_;
    default: {
      const double u = std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)));
      return profile(u) * c;
    }
  }
}

double Window::eval(double x) const { return profile(x / support_); }

double Window::periodization_eval(double x) const {
  const double y = x - std::floor(x + 0.5);
  return eval(y);
}

double Window::unscaled_ft(double w) const {
  const double aw = std::abs(w);
  const double beta = params_.beta;
  if (bspline_order_ > 0) {
    const double x = aw / bspline_scale_;
    const double nearest = std::round(x);
    if (nearest != 0.0 && std::abs(x - nearest) <= 1e-13 * x) return 0.0;
    const double s = specfun::sinc(kPi * x);
    return std::pow(s, bspline_order_) / (bspline_scale_ * bspline_peak_);
  }
  switch (kind_.tag) {
    case Kind::Algebraic: {
      const double lead = std::sqrt(kPi) * std::exp(std::lgamma(beta + 0.5));
      return lead * specfun::bessel_j_scaled(beta, 2.0 * kPi * aw);
    }
    case Kind::Bessel: {
      const double z = 2.0 * kPi * aw;
      return 2.0 * beta * beta * norm_ * specfun::spherical2_ratio(beta * beta - z * z);
    }
    case Kind::ModifiedCosh: {
      const double z = 2.0 * kPi * aw;
      const double inner = beta * beta - z * z;
      const double first = inner >= 0.0 ? specfun::bessel_i(0.0, std::sqrt(inner))
                                         : specfun::bessel_j(0.0, std::sqrt(-inner));
      return kPi * norm_ * (first - specfun::bessel_j(0.0, z));
    }
    default:
      throw std::logic_error("unscaled_ft: no closed form for " + std::string(kind_name(kind_.tag)));
  }
}

double Window::unscaled_ft_numeric(double w) const {
  std::vector<double> u;
  std::vector<double> wf;
  build_quadrature(*this, std::abs(w), u, wf);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += wf[i] * std::cos(2.0 * kPi * w * u[i]);
  return 2.0 * sum;
}

double Window::fourier_transform_numeric(double v) const {
  return support_ * unscaled_ft_numeric(support_ * v);
}

double Window::fourier_transform(double v) const {
  if (has_analytic_ft(kind_.tag)) return support_ * unscaled_ft(support_ * v);
  return fourier_transform_numeric(v);
}

double Window::fourier_coefficient(std::int64_t k) const {
  const double value = fourier_transform(static_cast<double>(k));
  const std::int64_t half = params_.N / 2;
  if (k >= -half && k <= half && !(value > 0.0)) throw NonpositiveCoefficient(k, value);
  return value;
}

QuadratureFt::QuadratureFt(const Window& window, double max_abs_v) : scale_(window.support()) {
  build_quadrature(window, scale_ * std::abs(max_abs_v), u_, wf_);
  for (double& w : wf_) w *= 2.0 * scale_;
}

double QuadratureFt::operator()(double v) const {
  const double k = 2.0 * kPi * scale_ * v;
  double sum = 0.0;
  for (std::size_t i = 0; i < u_.size(); ++i) sum += wf_[i] * std::cos(k * u_[i]);
  return sum;
}

void QuadratureFt::progression(double v0, double dv, std::size_t count, double* out) const {
  const std::size_t n = u_.size();
  std::vector<double> c(n), s(n), cd(n), sd(n);
  const double k0 = 2.0 * kPi * scale_ * v0;
  const double kd = 2.0 * kPi * scale_ * dv;
  for (std::size_t i = 0; i < n; ++i) {
    cd[i] = std::cos(kd * u_[i]);
    sd[i] = std::sin(kd * u_[i]);
  }
  constexpr std::size_t kReseed = 64;
  for (std::size_t k = 0; k < count; ++k) {
    if (k % kReseed == 0) {
      const double phase = k0 + static_cast<double>(k) * kd;
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = std::cos(phase * u_[i]);
        s[i] = std::sin(phase * u_[i]);
      }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += wf_[i] * c[i];
    out[k] = sum;
    for (std::size_t i = 0; i < n; ++i) {
      const double cn = c[i] * cd[i] - s[i] * sd[i];
      s[i] = s[i] * cd[i] + c[i] * sd[i];
      c[i] = cn;
    }
  }
}

}  // namespace nfw
