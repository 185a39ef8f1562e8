// Copyright 2026 The qshift developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// Discrete Fourier transforms of arbitrary length: iterative radix-2 for
/// powers of two, Bluestein's chirp-z reduction for everything else. Plans
/// precompute twiddle tables so repeated application is O(N log N).

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "qshift/dense_operator.hpp"

namespace qshift {

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

// In-place radix-2 transform, n a power of two. roots holds e^{-2 pi i k/n}
// for k < n/2; the inverse pass conjugates them. No output scaling.
inline void fft_pow2(cplx* a, std::size_t n, const std::vector<cplx>& roots, bool inverse) {
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx w = roots[k * stride];
        if (inverse) w = std::conj(w);
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace detail

/// Plan for the unscaled DFT of fixed length n:
///   forward: out_k = sum_j a_j e^{-2 pi i jk/n}
///   inverse: out_k = sum_j a_j e^{+2 pi i jk/n}
class DftPlan {
 public:
  explicit DftPlan(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("DftPlan: length must be positive");
    if (is_pow2(n)) {
      build_roots(n, roots_);
      return;
    }
    // Bluestein: jk = (j^2 + k^2 - (k-j)^2)/2 turns the DFT into a
    // convolution with the chirp c_j = e^{-i pi j^2 / n}.
    m_ = next_pow2(2 * n - 1);
    build_roots(m_, roots_);
    chirp_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t sq = (j * j) % (2 * n);  // exact phase reduction
      chirp_[j] = std::polar(1.0, -pi * static_cast<double>(sq) / static_cast<double>(n));
    }
    filter_fft_.assign(m_, cplx{});
    filter_fft_[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n; ++j) {
      filter_fft_[j] = std::conj(chirp_[j]);
      filter_fft_[m_ - j] = std::conj(chirp_[j]);
    }
    detail::fft_pow2(filter_fft_.data(), m_, roots_, /*inverse=*/false);
  }

  std::size_t size() const { return n_; }

  void forward(cplx* a) const { run(a, /*inverse=*/false); }
  void inverse(cplx* a) const { run(a, /*inverse=*/true); }

 private:
  static void build_roots(std::size_t n, std::vector<cplx>& roots) {
    roots.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
      roots[k] = std::polar(1.0, -two_pi * static_cast<double>(k) / static_cast<double>(n));
  }

  void run(cplx* a, bool inverse) const {
    if (n_ == 1) return;
    if (m_ == 0) {
      detail::fft_pow2(a, n_, roots_, inverse);
      return;
    }
    // The inverse transform is conj(forward(conj(a))).
    if (inverse)
      for (std::size_t j = 0; j < n_; ++j) a[j] = std::conj(a[j]);
    std::vector<cplx> y(m_, cplx{});
    for (std::size_t j = 0; j < n_; ++j) y[j] = a[j] * chirp_[j];
    detail::fft_pow2(y.data(), m_, roots_, false);
    for (std::size_t j = 0; j < m_; ++j) y[j] *= filter_fft_[j];
    detail::fft_pow2(y.data(), m_, roots_, true);
    const double scale = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k) a[k] = y[k] * scale * chirp_[k];
    if (inverse)
      for (std::size_t j = 0; j < n_; ++j) a[j] = std::conj(a[j]);
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;  // Bluestein convolution length; 0 for the radix-2 path
  std::vector<cplx> roots_;
  std::vector<cplx> chirp_;
  std::vector<cplx> filter_fft_;
};

/// Shared plan cache. Plans are immutable once built and safe to use from
/// several threads.
inline const DftPlan& dft_plan(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<DftPlan>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<DftPlan>(n)).first;
  return *it->second;
}

}  // namespace qshift
