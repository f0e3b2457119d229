#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nfw/windows.hpp"

namespace nfw {

enum class Method { Aliasing, Periodization };

std::string_view method_name(Method method);

struct ErrorConstantResult {
  WindowKind kind;
  int m = 0;
  double sigma = 0.0;
  int N = 0;
  double beta = 0.0;
  Method method = Method::Periodization;
  double value = 0.0;       // best estimate
  double lower = 0.0;       // sup without tail (aliasing) or grid sup (periodization)
  double upper = 0.0;       // lower plus tail (aliasing) or refined sup (periodization)
  double tail_bound = 0.0;  // alias truncation remainder, 0 for periodization
  int r_max = 0;
  int grid = 0;
  int argmax_n = 0;
  double argmax_t = 0.0;    // t = L x mod 1 of the maximizer
  bool converged = true;    // aliasing: tail below tolerance without extrapolation
};

struct AliasingOptions {
  double tol = 1e-12;
  int grid = 4096;
  int rmax_cap = 0;  // 0 selects 4096 for closed-form transforms, 256 otherwise
};

// max_{0 <= n <= N/2} sup_t |sum_{r != 0} phi_hat(n + rL)/phi_hat(n) e^{2 pi i r t}|.
ErrorConstantResult error_constant_aliasing(const Window& window, const AliasingOptions& options = {});

// max_n sup_x |(1/(L c_n)) sum_l e^{-2 pi i n l/L} phi~(x + l/L) - e^{2 pi i n x}|,
// sampled at `grid` points per period 1/L and refined by golden-section search.
ErrorConstantResult error_constant_periodization(const Window& window, int grid = 64);

// scale (2/(mu-1)) (1-|u|)^{1-mu}; bounds sum_{r not in {0,+-1}} |u+r|^-mu.
double tail_bound(double u, double mu, double scale);

// |phi_hat_0(w)| <= c2 |w|^-mu for |w| >= w0; c1 bounds the first alias annulus.
struct DecayProfile {
  double c1 = 0.0;
  double c2 = 0.0;
  double mu = 0.0;
  double w0 = 0.0;
};

// Decay exponent of |phi_hat_0| (for jump windows, of the transform minus its
// jump part).
double asymptotic_exponent(const Window& window);
// Valid (c2, mu, w0) for the unscaled transform, when one is known.
std::optional<DecayProfile> certified_decay_profile(const Window& window);
// The constants used in the published bound proofs (B-spline, algebraic,
// Bessel, modified cosh).
DecayProfile published_decay_profile(const WindowKind& kind, int m, double sigma, double beta);

// (1/ft_half_band) [2 c1 + (2 c2/((mu-1) m^mu)) (1 - 1/(2 sigma))^{1-mu}].
double general_bound_from_profile(const DecayProfile& profile, int m, double sigma,
                                  double ft_half_band);

struct BoundInfo {
  double value = 0.0;
  bool proxy = false;   // borrowed from a related kind
  Kind source = Kind::BSpline;
};

// Throws InvalidWindow when sigma is outside the kind's admissible range.
BoundInfo theoretical_bound(const WindowKind& kind, int m, double sigma);
// Modified cosh bound with I0 - 1/2 in the denominator.
double mcosh_bound_minus_half(int m, double sigma);
// 4 m^{3/2} e^{-2 pi m sqrt(1 - 1/sigma)}.
double kaiser_bessel_reference(int m, double sigma);

struct BoundReport {
  ErrorConstantResult measured;
  BoundInfo bound;
  bool ok = false;
};

// Measures by periodization and compares the refined sup against the bound
// with 1e-9 relative slack.
BoundReport verify_bound(const WindowKind& kind, int m, double sigma, int N,
                         std::optional<double> beta = std::nullopt, int grid = 64);

}  // namespace nfw
