#include "nfw/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nfw/specfun.hpp"

namespace nfw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t wrap_index(std::int64_t l, std::int64_t L) {
  const std::int64_t r = l % L;
  return static_cast<std::size_t>(r < 0 ? r + L : r);
}

std::vector<double> inverse_coefficients(const Window& window) {
  const int N = window.params().N;
  std::vector<double> inv(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) inv[static_cast<std::size_t>(i)] = 1.0 / window.fourier_coefficient(i - N / 2);
  return inv;
}

// g_l = (1/L) sum_{k in I_N} c_k / c_k(phi~) e^{2 pi i k l / L}.
std::vector<Complex> grid_coefficients(const Fft& fft, const std::vector<double>& inv,
                                       const TrigPolynomial& poly) {
  const auto L = static_cast<std::int64_t>(fft.size());
  std::vector<Complex> g(fft.size(), Complex(0.0, 0.0));
  for (int i = 0; i < poly.N; ++i) {
    const std::int64_t k = i - poly.N / 2;
    g[wrap_index(k, L)] = poly.coeffs[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(i)];
  }
  fft.inverse(g.data());
  const double scale = 1.0 / static_cast<double>(L);
  for (auto& v : g) v *= scale;
  return g;
}

std::pair<std::int64_t, std::int64_t> gather_range(double x, int L, double K) {
  const double t = x * L;
  return {static_cast<std::int64_t>(std::ceil(t - K)), static_cast<std::int64_t>(std::floor(t + K))};
}

}  // namespace

TrigPolynomial TrigPolynomial::zeros(int N) {
  TrigPolynomial p;
  p.N = N;
  p.coeffs.assign(static_cast<std::size_t>(std::max(N, 0)), Complex(0.0, 0.0));
  return p;
}

void TrigPolynomial::validate() const {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("polynomial degree N must be even and >= 2");
  if (coeffs.size() != static_cast<std::size_t>(N)) {
    throw std::invalid_argument("polynomial needs exactly N coefficients");
  }
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("polynomial coefficients must be finite");
    }
  }
}

void NodeSet::validate() const {
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double x = nodes[j];
    if (!(x >= -0.5 && x < 0.5)) {
      throw std::invalid_argument("node " + std::to_string(j) + " lies outside [-1/2, 1/2)");
    }
  }
}

std::vector<Complex> ndft_forward(const TrigPolynomial& poly, const NodeSet& nodes) {
  poly.validate();
  std::vector<Complex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Complex sum(0.0, 0.0);
    for (int i = 0; i < poly.N; ++i) {
      const double k = i - poly.N / 2;
      sum += poly.coeffs[static_cast<std::size_t>(i)] * std::polar(1.0, kTwoPi * k * nodes.nodes[j]);
    }
    out[j] = sum;
  }
  return out;
}

std::vector<Complex> ndft_adjoint(const std::vector<Complex>& values, const NodeSet& nodes, int N) {
  if (values.size() != nodes.size()) throw PlanMismatch("ndft_adjoint: values and nodes differ in length");
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("ndft_adjoint: N must be even and >= 2");
  std::vector<Complex> out(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    const double k = i - N / 2;
    Complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      sum += values[j] * std::polar(1.0, kTwoPi * k * nodes.nodes[j]);
    }
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

NfftPlan::NfftPlan(const Window& window, NodeSet nodes)
    : window_(window), nodes_(std::move(nodes)), fft_(static_cast<std::size_t>(window.grid_length())) {
  nodes_.validate();
  inv_coeffs_ = inverse_coefficients(window_);
  const int L = window_.grid_length();
  const double K = window_.grid_half_width();
  row_start_.reserve(nodes_.size() + 1);
  row_start_.push_back(0);
  for (double x : nodes_.nodes) {
    const auto [lo, hi] = gather_range(x, L, K);
    for (std::int64_t l = lo; l <= hi; ++l) {
      grid_index_.push_back(static_cast<std::int32_t>(wrap_index(l, L)));
      window_value_.push_back(window_.eval(x - static_cast<double>(l) / L));
    }
    row_start_.push_back(grid_index_.size());
  }
}

double NfftPlan::rounding_allowance() const {
  const double peak = *std::max_element(inv_coeffs_.begin(), inv_coeffs_.end());
  const double c0 = 1.0 / inv_coeffs_[inv_coeffs_.size() / 2];
  return 64.0 * std::numeric_limits<double>::epsilon() * peak * c0;
}

std::vector<Complex> nfft_forward(const NfftPlan& plan, const TrigPolynomial& poly) {
  if (poly.N != plan.N()) {
    throw PlanMismatch("nfft_forward: polynomial N = " + std::to_string(poly.N) +
                       " but plan N = " + std::to_string(plan.N()));
  }
  poly.validate();
  const std::vector<Complex> g = grid_coefficients(plan.fft(), plan.inv_coeffs(), poly);
  const auto& rows = plan.row_start();
  const auto& idx = plan.grid_index();
  const auto& val = plan.window_value();
  std::vector<Complex> out(plan.nodes().size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    Complex sum(0.0, 0.0);
    for (std::size_t e = rows[j]; e < rows[j + 1]; ++e) sum += g[static_cast<std::size_t>(idx[e])] * val[e];
    out[j] = sum;
  }
  return out;
}

std::vector<Complex> nfft_adjoint(const NfftPlan& plan, const std::vector<Complex>& values) {
  if (values.size() != plan.nodes().size()) {
    throw PlanMismatch("nfft_adjoint: " + std::to_string(values.size()) + " values for " +
                       std::to_string(plan.nodes().size()) + " nodes");
  }
  const auto L = static_cast<std::size_t>(plan.grid_length());
  const auto& rows = plan.row_start();
  const auto& idx = plan.grid_index();
  const auto& val = plan.window_value();
  std::vector<Complex> h(L, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t e = rows[j]; e < rows[j + 1]; ++e) h[static_cast<std::size_t>(idx[e])] += values[j] * val[e];
  }
  plan.fft().inverse(h.data());
  const int N = plan.N();
  const auto& inv = plan.inv_coeffs();
  std::vector<Complex> out(static_cast<std::size_t>(N));
  const double scale = 1.0 / static_cast<double>(L);
  for (int i = 0; i < N; ++i) {
    const std::int64_t k = i - N / 2;
    out[static_cast<std::size_t>(i)] =
        h[wrap_index(k, static_cast<std::int64_t>(L))] * (scale * inv[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<Complex> nfft_grid(const Window& window, const TrigPolynomial& poly) {
  if (poly.N != window.params().N) throw PlanMismatch("nfft_grid: polynomial N differs from window N");
  poly.validate();
  const Fft fft(static_cast<std::size_t>(window.grid_length()));
  return grid_coefficients(fft, inverse_coefficients(window), poly);
}

Complex eval_approximant(const Window& window, const std::vector<Complex>& grid, double x) {
  const int L = window.grid_length();
  if (grid.size() != static_cast<std::size_t>(L)) throw PlanMismatch("eval_approximant: grid length differs from L");
  const auto [lo, hi] = gather_range(x, L, window.grid_half_width());
  Complex sum(0.0, 0.0);
  for (std::int64_t l = lo; l <= hi; ++l) {
    sum += grid[wrap_index(l, L)] * window.eval(x - static_cast<double>(l) / L);
  }
  return sum;
}

double wiener_norm(const TrigPolynomial& poly) {
  double sum = 0.0;
  for (const auto& c : poly.coeffs) sum += std::abs(c);
  return sum;
}

double sobolev_bound_factor(double lambda) {
  if (!(lambda > 0.5)) throw std::domain_error("sobolev_bound_factor: requires lambda > 1/2");
  return std::sqrt(1.0 + 2.0 * specfun::riemann_zeta(2.0 * lambda));
}

}  // namespace nfw
