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

/// The smooth family embedding the shift operator,
///   S(theta; alpha, P) = F_2L^-1(a,a) . (e^{-i theta P} H_a (x) I_L)
///                        . blockdiag(F_L(a, a/2), F_L(a, (1+a)/2))
///                      = V(theta) S,
/// with H_a = (1/sqrt 2)[[1, 1], [e^{-i pi a}, -e^{-i pi a}]] and P a Pauli
/// matrix acting on the most-significant qubit of H_2 (x) H_L. theta = 0
/// recovers S for every boundary phase alpha; theta = -pi/4 and +pi/4 at
/// alpha = 1/2, P = sigma_x recover the bakers B and B'.

#pragma once

#include <utility>

#include "qshift/factored_operator.hpp"
#include "qshift/shift_operator.hpp"

namespace qshift {

enum class Pauli { X, Y, Z };

inline char pauli_name(Pauli p) {
  switch (p) {
    case Pauli::X: return 'x';
    case Pauli::Y: return 'y';
    default: return 'z';
  }
}

/// Member of the perturbation family: rotation angle, boundary phase, axis.
struct PerturbationSpec {
  double theta = 0.0;
  double alpha = 0.0;
  Pauli pauli = Pauli::Y;

  PerturbationSpec() = default;
  PerturbationSpec(double t, double a, Pauli p) : theta(t), alpha(a), pauli(p) {
    if (!(std::abs(t) <= pi))
      throw std::invalid_argument("PerturbationSpec: |theta| must be <= pi");
  }
};

struct Mat2 {
  cplx a, b, c, d;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

inline Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::X: return {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
    case Pauli::Y: return {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}};
    default: return {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}};
  }
}

/// exp(-i theta sigma_P) = cos(theta) I - i sin(theta) sigma_P.
inline Mat2 pauli_rotation(Pauli p, double theta) {
  const double c = std::cos(theta);
  const cplx is{0.0, std::sin(theta)};
  const Mat2 s = pauli_matrix(p);
  return {c - is * s.a, -is * s.b, -is * s.c, c - is * s.d};
}

/// H_a, the phased Hadamard mixing the qubit factor in the factored shift.
inline Mat2 qubit_hadamard(double alpha) {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx ph = std::polar(r, -pi * alpha);
  return {cplx{r, 0}, cplx{r, 0}, ph, -ph};
}

namespace detail {

inline FactoredOperator shift_family_factored(std::size_t n, double alpha, const Mat2& mix) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("shift operator family: N must be even and >= 4");
  const std::size_t L = n / 2;
  FactoredOperator op;
  op.dim = n;
  op.factors.push_back(FourierFactor{0, PhasedFourier(L, alpha, alpha / 2.0), false});
  op.factors.push_back(FourierFactor{L, PhasedFourier(L, alpha, (1.0 + alpha) / 2.0), false});
  op.factors.push_back(QubitMixFactor{mix.a, mix.b, mix.c, mix.d});
  op.factors.push_back(FourierFactor{0, PhasedFourier(n, alpha, alpha), true});
  return op;
}

}  // namespace detail

/// The shift operator in its Fourier-factored form. The materialization does
/// not depend on alpha.
inline FactoredOperator build_shift_factored(std::size_t n, double alpha) {
  return detail::shift_family_factored(n, alpha, qubit_hadamard(alpha));
}

/// S(theta; alpha, P) as a factor chain, for O(N log N) application per step.
inline FactoredOperator build_perturbed_factored(std::size_t n, const PerturbationSpec& spec) {
  const Mat2 mix = pauli_rotation(spec.pauli, spec.theta) * qubit_hadamard(spec.alpha);
  return detail::shift_family_factored(n, spec.alpha, mix);
}

/// S(theta; alpha, P) = V(theta) S as a dense matrix.
inline DenseOperator build_perturbed(std::size_t n, const PerturbationSpec& spec) {
  DenseOperator u = build_perturbed_factored(n, spec).materialize();
  u.unitary = true;
  return u;
}

/// C = F_2L^-1(a,a) (sigma_P (x) I_L) F_2L(a,a) together with its max-norm
/// deviation from the reference conjugation target:
///   P = X -> I_L (x) sigma_z   (exact identity at alpha = 0)
///   P = Y -> I_L (x) sigma_x   (approximation)
///   P = Z -> I_L (x) sigma_y   (approximation)
/// The target tensor product pairs the least-significant qubit, i.e. acts on
/// amplitude pairs (2k, 2k+1).
inline std::pair<DenseOperator, double> pauli_fourier_conjugate(Pauli p, std::size_t L,
                                                                double alpha) {
  if (L < 1) throw std::invalid_argument("pauli_fourier_conjugate: L must be >= 1");
  const std::size_t n = 2 * L;
  const PhasedFourier f(n, alpha, alpha);
  DenseOperator c(n);
  std::vector<cplx> col(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::fill(col.begin(), col.end(), cplx{});
    col[m] = cplx{1.0, 0.0};
    f.apply(col, false);
    // sigma_P on the most-significant qubit: mixes (k, L+k)
    const Mat2 s = pauli_matrix(p);
    for (std::size_t k = 0; k < L; ++k) {
      const cplx x = col[k], y = col[L + k];
      col[k] = s.a * x + s.b * y;
      col[L + k] = s.c * x + s.d * y;
    }
    f.apply(col, true);
    for (std::size_t r = 0; r < n; ++r) c.at(r, m) = col[r];
  }
  c.unitary = true;

  DenseOperator target(n);
  const Mat2 t = pauli_matrix(p == Pauli::X ? Pauli::Z : (p == Pauli::Y ? Pauli::X : Pauli::Y));
  for (std::size_t k = 0; k < L; ++k) {
    target.at(2 * k, 2 * k) = t.a;
    target.at(2 * k, 2 * k + 1) = t.b;
    target.at(2 * k + 1, 2 * k) = t.c;
    target.at(2 * k + 1, 2 * k + 1) = t.d;
  }
  const double deviation = max_norm_diff(c, target);
  return {std::move(c), deviation};
}

}  // namespace qshift
