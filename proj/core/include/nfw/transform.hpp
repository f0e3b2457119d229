#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nfw/windows.hpp"

namespace nfw {

using Complex = std::complex<double>;

class PlanMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FftDirection { Forward, Inverse };

// Unnormalized radix-2 DFT. Forward uses e^{-2 pi i k l / L}, inverse e^{+...}.
// Throws std::invalid_argument unless the length is a power of two.
std::vector<Complex> fft_complex(std::vector<Complex> data, FftDirection direction);

// Reusable DFT of fixed length: radix-2 for powers of two, Bluestein otherwise.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(Complex* data) const;
  void inverse(Complex* data) const;

 private:
  void radix2(Complex* data, bool inverse) const;
  void bluestein(Complex* data) const;

  std::size_t n_ = 0;
  std::size_t pow2_ = 0;            // transform length actually run
  std::vector<Complex> twiddle_;    // e^{-2 pi i j / pow2_}, j < pow2_/2
  std::vector<std::size_t> bitrev_;
  std::vector<Complex> chirp_;      // e^{-i pi k^2 / n}
  std::vector<Complex> kernel_hat_; // transformed conjugate chirp
};

// f(x) = sum_{k in I_N} c_k e^{2 pi i k x}; coeffs[i] holds c_{i - N/2}.
struct TrigPolynomial {
  int N = 0;
  std::vector<Complex> coeffs;

  static TrigPolynomial zeros(int N);
  Complex coeff(std::int64_t k) const { return coeffs[static_cast<std::size_t>(k + N / 2)]; }
  Complex& coeff(std::int64_t k) { return coeffs[static_cast<std::size_t>(k + N / 2)]; }
  void validate() const;
};

struct NodeSet {
  std::vector<double> nodes;

  std::size_t size() const { return nodes.size(); }
  // Throws std::invalid_argument when a node lies outside [-1/2, 1/2).
  void validate() const;
};

// Direct evaluation f(x_j).
std::vector<Complex> ndft_forward(const TrigPolynomial& poly, const NodeSet& nodes);
// Direct sums s_k = sum_j f_j e^{2 pi i k x_j}, k in I_N, natural order.
std::vector<Complex> ndft_adjoint(const std::vector<Complex>& values, const NodeSet& nodes, int N);

class NfftPlan {
 public:
  NfftPlan(const Window& window, NodeSet nodes);

  const Window& window() const { return window_; }
  const NodeSet& nodes() const { return nodes_; }
  int N() const { return window_.params().N; }
  int grid_length() const { return window_.grid_length(); }
  const Fft& fft() const { return fft_; }

  // 1/c_k(phi~) for k in I_N, natural order.
  const std::vector<double>& inv_coeffs() const { return inv_coeffs_; }
  // Gather list of node j: entries row_start[j] .. row_start[j+1]-1.
  const std::vector<std::size_t>& row_start() const { return row_start_; }
  const std::vector<std::int32_t>& grid_index() const { return grid_index_; }
  const std::vector<double>& window_value() const { return window_value_; }

  // Floating-point slack per unit input norm: 64 eps max_k c_0(phi~)/c_k(phi~).
  double rounding_allowance() const;

 private:
  Window window_;
  NodeSet nodes_;
  Fft fft_;
  std::vector<double> inv_coeffs_;
  std::vector<std::size_t> row_start_;
  std::vector<std::int32_t> grid_index_;
  std::vector<double> window_value_;
};

// Approximate f(x_j).
std::vector<Complex> nfft_forward(const NfftPlan& plan, const TrigPolynomial& poly);
// Approximate s_k, k in I_N, natural order.
std::vector<Complex> nfft_adjoint(const NfftPlan& plan, const std::vector<Complex>& values);

// Grid coefficients g_l, l = 0 .. L-1, of the forward approximant
// s(x) = sum_l g_l phi~(x - l/L).
std::vector<Complex> nfft_grid(const Window& window, const TrigPolynomial& poly);
// s(x) for any real x.
Complex eval_approximant(const Window& window, const std::vector<Complex>& grid, double x);

// sum_k |c_k|.
double wiener_norm(const TrigPolynomial& poly);
// sqrt(1 + 2 zeta(2 lambda)); throws std::domain_error for lambda <= 1/2.
double sobolev_bound_factor(double lambda);

}  // namespace nfw
