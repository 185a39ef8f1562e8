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

/// Quantum baker maps with boundary-phase decorations. The two variants are
///
///   B_2L  = F_2L^-1(a,a) . [[ F_L(a, a/2),            0                        ],
///                           [ 0,                      -e^{-i pi a} F_L(a,(a+1)/2) ]]
///   B'_2L = F_2L^-1(a,a) . [[ 0,                      F_L(a,(1+a)/2)           ],
///                           [ e^{-i pi a} F_L(a, a/2), 0                        ]]
///
/// and the shift operator is their coherent sum, S = (B + B')/sqrt(2).
/// Entries are evaluated in closed form: the row sums collapse to finite
/// geometric series, giving O(1) work per entry,
///
///   B [n, m]      = g(n - 2m)                    (m < L)
///   B [n, L + m'] = (-1)^{n+1} g(n - 2m' - 1)
///   B'[n, m]      = (-1)^n     g(n - 2m)         (m < L)
///   B'[n, L + m'] = g(n - 2m' - 1)
///
/// with g(d) = e^{i pi a d / L} G(d) / (L sqrt(2)) and
/// G(d) = sum_{j<L} e^{i pi j d / L}: L at d = 0, zero for even d, and
/// -2 / (e^{i pi d/L} - 1) for odd d.

#pragma once

#include "qshift/dense_operator.hpp"
#include "qshift/phased_fourier.hpp"

namespace qshift {

enum class BakerKind { standard, reverse_stacked };

namespace detail {

/// Table of g(d) for d in (-2L, 2L), indexed by d + 2L.
inline std::vector<cplx> baker_kernel_table(std::size_t L, double alpha) {
  const double Ld = static_cast<double>(L);
  const double scale = 1.0 / (Ld * std::sqrt(2.0));
  std::vector<cplx> table(4 * L, cplx{});
  for (std::ptrdiff_t d = -static_cast<std::ptrdiff_t>(2 * L) + 1;
       d < static_cast<std::ptrdiff_t>(2 * L); ++d) {
    const double dd = static_cast<double>(d);
    cplx g;
    if (d == 0) {
      g = cplx{Ld, 0.0};
    } else if ((d % 2) == 0) {
      g = cplx{};
    } else {
      g = -2.0 / (std::polar(1.0, pi * dd / Ld) - cplx{1.0, 0.0});
    }
    table[static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(2 * L))] =
        g * std::polar(scale, pi * alpha * dd / Ld);
  }
  return table;
}

}  // namespace detail

/// Builds B_2L (standard stacking) or B'_2L (reverse stacking) on dimension
/// N = 2L with boundary phase alpha.
inline DenseOperator build_baker(BakerKind kind, std::size_t L, double alpha) {
  if (L < 1) throw std::invalid_argument("build_baker: L must be >= 1");
  const std::size_t n = 2 * L;
  const std::vector<cplx> g = detail::baker_kernel_table(L, alpha);
  const auto kernel = [&](std::ptrdiff_t d) {
    return g[static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(n))];
  };
  DenseOperator b(n);
  const bool standard = (kind == BakerKind::standard);
  for (std::size_t row = 0; row < n; ++row) {
    const double row_sign = (row % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < L; ++m) {
      const std::ptrdiff_t d =
          static_cast<std::ptrdiff_t>(row) - 2 * static_cast<std::ptrdiff_t>(m);
      b.at(row, m) = standard ? kernel(d) : row_sign * kernel(d);
    }
    for (std::size_t m = 0; m < L; ++m) {
      const std::ptrdiff_t d =
          static_cast<std::ptrdiff_t>(row) - 2 * static_cast<std::ptrdiff_t>(m) - 1;
      b.at(row, L + m) = standard ? -row_sign * kernel(d) : kernel(d);
    }
  }
  b.unitary = true;
  return b;
}

/// The baker with anti-periodic boundary conditions on both the full and the
/// half transforms: G_2L^-1 . blockdiag(G_L, G_L), G_N = F_N(1/2, 1/2).
/// Differs from build_baker(standard, L, 1/2) by diagonal decorations of the
/// half-size Fourier blocks.
inline DenseOperator saraceno_baker(std::size_t L) {
  if (L < 2) throw std::invalid_argument("saraceno_baker: L must be >= 2");
  const std::size_t n = 2 * L;
  const DenseOperator g_half = PhasedFourier(L, 0.5, 0.5).dense();
  DenseOperator inner(n);
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t c = 0; c < L; ++c) {
      inner.at(r, c) = g_half.at(r, c);
      inner.at(L + r, L + c) = g_half.at(r, c);
    }
  const DenseOperator g_full_inv = adjoint(PhasedFourier(n, 0.5, 0.5).dense());
  DenseOperator b = compose(g_full_inv, inner);
  b.unitary = true;
  return b;
}

}  // namespace qshift
