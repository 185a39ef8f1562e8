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

/// Structured operators as ordered factor lists, applied in O(N log N) per
/// step instead of O(N^2). Factors cover permutations, diagonal phases,
/// phased Fourier transforms on contiguous index ranges, and 2x2 mixings of
/// the most-significant qubit of H_2 (x) H_L.

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qshift/dense_operator.hpp"
#include "qshift/permutation.hpp"
#include "qshift/phased_fourier.hpp"

namespace qshift {

struct PermutationFactor {
  Permutation perm;
};

struct DiagonalFactor {
  std::vector<cplx> phase;
};

/// F (or F^{-1}) acting on indices [offset, offset + transform.dim), identity
/// elsewhere.
struct FourierFactor {
  std::size_t offset = 0;
  PhasedFourier transform;
  bool inverse = false;
};

/// (M (x) I_L) with M = [[a, b], [c, d]] on the most-significant qubit:
/// mixes amplitude pairs (k, L + k).
struct QubitMixFactor {
  cplx a, b, c, d;
};

using OperatorFactor = std::variant<PermutationFactor, DiagonalFactor, FourierFactor, QubitMixFactor>;

/// Product of primitive factors; factors[0] is applied to the state first, so
/// as a matrix the operator is factors[last] * ... * factors[0].
struct FactoredOperator {
  std::size_t dim = 0;
  std::vector<OperatorFactor> factors;

  void apply_in_place(std::span<cplx> v) const {
    if (v.size() != dim) throw std::invalid_argument("FactoredOperator: dimension mismatch");
    for (const OperatorFactor& f : factors) apply_factor(f, v);
  }

  StateVector apply(const StateVector& in) const {
    StateVector out = in;
    apply_in_place(std::span<cplx>(out.amplitudes));
    return out;
  }

  /// Applies the factor chain to every basis vector; column m of the result
  /// is the image of |m>.
  DenseOperator materialize() const {
    DenseOperator out(dim);
    std::vector<cplx> col(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      std::fill(col.begin(), col.end(), cplx{});
      col[m] = cplx{1.0, 0.0};
      apply_in_place(col);
      for (std::size_t n = 0; n < dim; ++n) out.at(n, m) = col[n];
    }
    return out;
  }

 private:
  void apply_factor(const OperatorFactor& f, std::span<cplx> v) const {
    if (const auto* p = std::get_if<PermutationFactor>(&f)) {
      require_same_dim(p->perm.dim(), dim, "PermutationFactor");
      std::vector<cplx> moved(dim);
      for (std::size_t n = 0; n < dim; ++n) moved[p->perm(n)] = v[n];
      std::copy(moved.begin(), moved.end(), v.begin());
    } else if (const auto* d = std::get_if<DiagonalFactor>(&f)) {
      require_same_dim(d->phase.size(), dim, "DiagonalFactor");
      for (std::size_t n = 0; n < dim; ++n) v[n] *= d->phase[n];
    } else if (const auto* ff = std::get_if<FourierFactor>(&f)) {
      if (ff->offset + ff->transform.dim > dim)
        throw std::invalid_argument("FourierFactor: slice exceeds dimension");
      ff->transform.apply(v.subspan(ff->offset, ff->transform.dim), ff->inverse);
    } else {
      const auto& q = std::get<QubitMixFactor>(f);
      if (dim % 2 != 0) throw std::invalid_argument("QubitMixFactor: dimension must be even");
      const std::size_t L = dim / 2;
      for (std::size_t k = 0; k < L; ++k) {
        const cplx x = v[k], y = v[L + k];
        v[k] = q.a * x + q.b * y;
        v[L + k] = q.c * x + q.d * y;
      }
    }
  }
};

/// Single factor as a dense matrix (used to cross-check materialize() against
/// direct dense composition).
inline DenseOperator factor_dense(const OperatorFactor& f, std::size_t dim) {
  if (const auto* p = std::get_if<PermutationFactor>(&f)) return p->perm.to_dense();
  if (const auto* d = std::get_if<DiagonalFactor>(&f)) {
    DenseOperator out(dim);
    for (std::size_t n = 0; n < dim; ++n) out.at(n, n) = d->phase[n];
    return out;
  }
  if (const auto* ff = std::get_if<FourierFactor>(&f)) {
    DenseOperator out = DenseOperator::identity(dim);
    DenseOperator block = ff->transform.dense();
    if (ff->inverse) block = adjoint(block);
    for (std::size_t r = 0; r < block.dim(); ++r)
      for (std::size_t c = 0; c < block.dim(); ++c)
        out.at(ff->offset + r, ff->offset + c) = block.at(r, c);
    return out;
  }
  const auto& q = std::get<QubitMixFactor>(f);
  return kron2(q.a, q.b, q.c, q.d, dim / 2);
}

}  // namespace qshift
