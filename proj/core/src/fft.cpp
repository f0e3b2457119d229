#include <cmath>
#include <numbers>

#include "nfw/transform.hpp"

namespace nfw {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Fft: length must be positive");
  pow2_ = is_power_of_two(n) ? n : next_power_of_two(2 * n - 1);

  twiddle_.resize(pow2_ / 2);
  for (std::size_t j = 0; j < twiddle_.size(); ++j) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / pow2_;
    twiddle_[j] = Complex(std::cos(angle), std::sin(angle));
  }
  bitrev_.resize(pow2_);
  int bits = 0;
  while ((std::size_t{1} << bits) < pow2_) ++bits;
  for (std::size_t i = 0; i < pow2_; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bitrev_[i] = r;
  }

  if (pow2_ != n_) {
    chirp_.resize(n_);
    const std::size_t period = 2 * n_;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t k2 = (k * k) % period;
      const double angle = -std::numbers::pi * static_cast<double>(k2) / n_;
      chirp_[k] = Complex(std::cos(angle), std::sin(angle));
    }
    kernel_hat_.assign(pow2_, Complex(0.0, 0.0));
    kernel_hat_[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n_; ++k) {
      kernel_hat_[k] = std::conj(chirp_[k]);
      kernel_hat_[pow2_ - k] = std::conj(chirp_[k]);
    }
    radix2(kernel_hat_.data(), false);
  }
}

void Fft::radix2(Complex* data, bool inverse) const {
  const std::size_t n = pow2_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = bitrev_[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Complex w = twiddle_[j * stride];
        if (inverse) w = std::conj(w);
        const Complex t = w * data[start + j + half];
        data[start + j + half] = data[start + j] - t;
        data[start + j] += t;
      }
    }
  }
}

void Fft::bluestein(Complex* data) const {
  std::vector<Complex> work(pow2_, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp_[k];
  radix2(work.data(), false);
  for (std::size_t k = 0; k < pow2_; ++k) work[k] *= kernel_hat_[k];
  radix2(work.data(), true);
  const double scale = 1.0 / static_cast<double>(pow2_);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * chirp_[k] * scale;
}

void Fft::forward(Complex* data) const {
  if (pow2_ == n_) {
    radix2(data, false);
  } else {
    bluestein(data);
  }
}

void Fft::inverse(Complex* data) const {
  if (pow2_ == n_) {
    radix2(data, true);
    return;
  }
  for (std::size_t k = 0; k < n_; ++k) data[k] = std::conj(data[k]);
  bluestein(data);
  for (std::size_t k = 0; k < n_; ++k) data[k] = std::conj(data[k]);
}

std::vector<Complex> fft_complex(std::vector<Complex> data, FftDirection direction) {
  if (!is_power_of_two(data.size())) {
    throw std::invalid_argument("fft_complex: length " + std::to_string(data.size()) +
                                " is not a power of two");
  }
  const Fft plan(data.size());
  if (direction == FftDirection::Forward) {
    plan.forward(data.data());
  } else {
    plan.inverse(data.data());
  }
  return data;
}

}  // namespace nfw
