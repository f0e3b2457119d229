#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nfw {

enum class Kind {
  BSpline,
  ModifiedBSpline,
  Triangular,
  Algebraic,
  Bessel,
  Sinh,
  Exp,
  Cosh,
  ModifiedCosh,
  ModifiedExp,
  ModifiedSinh,
};

inline constexpr Kind kAllKinds[] = {
    Kind::BSpline, Kind::ModifiedBSpline, Kind::Triangular,   Kind::Algebraic,
    Kind::Bessel,  Kind::Sinh,            Kind::Exp,          Kind::Cosh,
    Kind::ModifiedCosh, Kind::ModifiedExp, Kind::ModifiedSinh,
};

// CLI names: bspline, mbspline, triangular, algebraic, bessel, sinh, exp,
// cosh, mcosh, mexp, msinh.
std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

// True for kinds whose Fourier transform has a closed form.
bool has_analytic_ft(Kind kind);

struct WindowKind {
  Kind tag = Kind::BSpline;
  double b = 0.0;  // modified B-spline parameter, half-integer in [3/2, 8]
};

std::string describe(const WindowKind& kind);

class InvalidWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonpositiveCoefficient : public std::runtime_error {
 public:
  NonpositiveCoefficient(std::int64_t k, double value);
  std::int64_t index() const { return k_; }
  double value() const { return value_; }

 private:
  std::int64_t k_;
  double value_;
};

struct WindowParams {
  int m = 0;
  double sigma = 0.0;
  int N = 0;
  int N1 = 0;
  double beta = 0.0;
};

// beta = 2 pi m (1 - 1/(2 sigma)).
double default_beta(int m, double sigma);

// Builds validated parameters. N1 = sigma N; beta defaults to 3m for the
// algebraic window and to default_beta otherwise.
WindowParams make_params(const WindowKind& kind, int m, double sigma, int N,
                         std::optional<double> beta_override = std::nullopt);

// Throws InvalidWindow when an invariant fails.
void validate(const WindowKind& kind, const WindowParams& params);

// Non-fatal note when 2m > N1/8.
std::optional<std::string> params_warning(const WindowParams& params);

class Window {
 public:
  Window(WindowKind kind, WindowParams params);

  const WindowKind& kind() const { return kind_; }
  const WindowParams& params() const { return params_; }

  // Half-width m/N1 of the support.
  double support() const { return support_; }
  // Length L of the oversampled grid: N1, or N1 b for the modified B-spline.
  int grid_length() const { return grid_length_; }
  // Support half-width in grid units, m L / N1.
  double grid_half_width() const { return support_ * grid_length_; }

  // Unscaled profile phi_0 on [-1, 1].
  double profile(double u) const;
  // Limit of phi_0(u) as u -> 1 from inside (nonzero only for msinh, mexp).
  double edge_limit() const { return edge_limit_; }

  double eval(double x) const;
  double periodization_eval(double x) const;

  // Scaled Fourier transform; analytic where available, quadrature otherwise.
  double fourier_transform(double v) const;
  double fourier_transform_numeric(double v) const;
  // Unscaled transform of phi_0; throws std::logic_error for quadrature kinds.
  double unscaled_ft(double w) const;
  double unscaled_ft_numeric(double w) const;

  // c_k(phi~) = phi_hat(k); throws NonpositiveCoefficient for k in I_N with
  // phi_hat(k) <= 0.
  double fourier_coefficient(std::int64_t k) const;

  // Integrand of the theta-substituted quadrature: phi_0(sin t) cos t written
  // in terms of c = cos t, smooth on [0, pi/2].
  double theta_integrand(double c) const;
  // B-spline family: profile is M_{order}(scale u)/M_{order}(0).
  bool is_bspline_family() const { return bspline_order_ > 0; }
  int bspline_order() const { return bspline_order_; }
  double bspline_scale() const { return bspline_scale_; }

 private:
  WindowKind kind_;
  WindowParams params_;
  double support_ = 0.0;
  int grid_length_ = 0;
  double edge_limit_ = 0.0;
  int bspline_order_ = 0;
  double bspline_scale_ = 0.0;
  double bspline_peak_ = 1.0;
  double norm_ = 1.0;  // kind-specific normalization constant
};

// Quadrature nodes for phi_hat on a fixed frequency range, reusable across
// many frequencies (u-nodes in [0,1] with weights times the profile).
class QuadratureFt {
 public:
  QuadratureFt(const Window& window, double max_abs_v);

  double operator()(double v) const;
  // phi_hat(v0 + i dv) for i = 0 .. count-1.
  void progression(double v0, double dv, std::size_t count, double* out) const;
  std::size_t size() const { return u_.size(); }

 private:
  double scale_ = 0.0;  // m/N1
  std::vector<double> u_;
  std::vector<double> wf_;
};

}  // namespace nfw
