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

#pragma once

#include <span>

#include "qshift/dense_operator.hpp"
#include "qshift/fft.hpp"

namespace qshift {

/// Generalized Fourier transform with boundary phases:
///   F_N(alpha, beta)[n, m] = exp(-2 pi i (n+alpha)(m+beta)/N) / sqrt(N).
/// alpha = beta = 0 is the plain DFT; alpha = beta = 1/2 gives anti-periodic
/// boundary conditions. Unitary for all real alpha, beta.
///
/// Fast application uses the split
///   F = e^{-2 pi i alpha beta / N} . diag(e^{-2 pi i beta n/N}) . DFT .
///       diag(e^{-2 pi i alpha m/N}) / sqrt(N),
/// one diagonal on each side of a single DFT kernel.
struct PhasedFourier {
  std::size_t dim = 0;
  double alpha = 0.0;
  double beta = 0.0;

  PhasedFourier() = default;
  PhasedFourier(std::size_t n, double a, double b) : dim(n), alpha(a), beta(b) {
    if (n < 2) throw std::invalid_argument("PhasedFourier: dim must be >= 2");
  }

  cplx entry(std::size_t n, std::size_t m) const {
    const double N = static_cast<double>(dim);
    const double phase = -two_pi * (static_cast<double>(n) + alpha) * (static_cast<double>(m) + beta) / N;
    return std::polar(1.0 / std::sqrt(N), phase);
  }

  DenseOperator dense() const {
    DenseOperator f(dim);
    for (std::size_t n = 0; n < dim; ++n)
      for (std::size_t m = 0; m < dim; ++m) f.at(n, m) = entry(n, m);
    f.unitary = true;
    return f;
  }

  /// In-place fast application of F (or F^{-1} = F^dag when inverse is set).
  void apply(std::span<cplx> v, bool inverse = false) const {
    if (v.size() != dim) throw std::invalid_argument("PhasedFourier: dimension mismatch");
    const double N = static_cast<double>(dim);
    const DftPlan& plan = dft_plan(dim);
    const double scale = 1.0 / std::sqrt(N);
    if (!inverse) {
      for (std::size_t m = 0; m < dim; ++m)
        v[m] *= std::polar(1.0, -two_pi * alpha * static_cast<double>(m) / N);
      plan.forward(v.data());
      const cplx c = std::polar(scale, -two_pi * alpha * beta / N);
      for (std::size_t n = 0; n < dim; ++n)
        v[n] *= c * std::polar(1.0, -two_pi * beta * static_cast<double>(n) / N);
    } else {
      for (std::size_t m = 0; m < dim; ++m)
        v[m] *= std::polar(1.0, two_pi * beta * static_cast<double>(m) / N);
      plan.inverse(v.data());
      const cplx c = std::polar(scale, two_pi * alpha * beta / N);
      for (std::size_t n = 0; n < dim; ++n)
        v[n] *= c * std::polar(1.0, two_pi * alpha * static_cast<double>(n) / N);
    }
  }

  StateVector apply(const StateVector& in, bool inverse = false) const {
    StateVector out = in;
    apply(std::span<cplx>(out.amplitudes), inverse);
    out.normalized = in.normalized;
    return out;
  }
};

/// F_N(alpha, beta) as an explicit matrix; the unitary flag is set after a
/// defect check.
inline DenseOperator build_phased_fourier(std::size_t n, double alpha, double beta) {
  if (n < 2) throw std::invalid_argument("build_phased_fourier: N must be >= 2");
  DenseOperator f = PhasedFourier(n, alpha, beta).dense();
  f.unitary = false;
  f.mark_unitary(1e-10);
  return f;
}

}  // namespace qshift
