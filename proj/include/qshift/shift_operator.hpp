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

#include "qshift/permutation.hpp"

namespace qshift {

/// Modular multiplication by 2: the unitary permutation
///   S|n> = |2n mod (N-1)>  for n < N-1,   S|N-1> = |N-1>.
/// N must be even so that 2 is invertible mod N-1. Both 0 and N-1 are fixed
/// points and S^{k0(N-1)} = I, k0 the multiplicative order of 2 mod N-1.
struct ShiftOperator {
  std::size_t n = 0;  // Hilbert space dimension N
  Permutation perm;

  DenseOperator to_dense() const { return perm.to_dense(); }
};

inline ShiftOperator build_shift(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_shift: N must be an even integer >= 4");
  ShiftOperator s;
  s.n = n;
  s.perm.image.resize(n);
  const std::size_t m = n - 1;
  for (std::size_t i = 0; i < m; ++i) s.perm.image[i] = (2 * i) % m;
  s.perm.image[m] = m;
  return s;
}

/// Parity R|n> = |N-n-1>. Commutes with S exactly; fixed-point free for even N.
inline Permutation build_parity(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("build_parity: N must be even and >= 2");
  Permutation r;
  r.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.image[i] = n - 1 - i;
  return r;
}

/// Half-order operator R' = diag(1, R_{N-2}, 1): parity on the interior
/// labels with 0 and N-1 fixed. Equals S^{k0/2} exactly whenever
/// 2^{k0/2} = -1 mod (N-1).
inline Permutation build_half_order_op(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_half_order_op: N must be even and >= 4");
  Permutation r;
  r.image.resize(n);
  r.image[0] = 0;
  r.image[n - 1] = n - 1;
  for (std::size_t i = 1; i + 1 < n; ++i) r.image[i] = n - 1 - i;
  return r;
}

}  // namespace qshift
