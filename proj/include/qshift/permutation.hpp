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

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qshift/dense_operator.hpp"

namespace qshift {

/// Permutation of basis labels, |n> -> |image[n]>. Applications are exact
/// integer relabelings, so powers and inverses carry no floating-point error.
struct Permutation {
  std::vector<std::size_t> image;

  Permutation() = default;
  explicit Permutation(std::size_t dim) : image(dim) {
    std::iota(image.begin(), image.end(), std::size_t{0});
  }
  explicit Permutation(std::vector<std::size_t> img) : image(std::move(img)) {
    std::vector<bool> seen(image.size(), false);
    for (std::size_t t : image) {
      if (t >= image.size() || seen[t]) throw std::invalid_argument("Permutation: not a bijection");
      seen[t] = true;
    }
  }

  std::size_t dim() const { return image.size(); }
  std::size_t operator()(std::size_t n) const { return image[n]; }

  bool operator==(const Permutation& other) const { return image == other.image; }

  Permutation inverse() const {
    Permutation inv;
    inv.image.resize(dim());
    for (std::size_t n = 0; n < dim(); ++n) inv.image[image[n]] = n;
    return inv;
  }

  /// this composed after other: (a.then(b))(n) = b(a(n)).
  Permutation then(const Permutation& next) const {
    require_same_dim(dim(), next.dim(), "Permutation::then");
    Permutation out;
    out.image.resize(dim());
    for (std::size_t n = 0; n < dim(); ++n) out.image[n] = next(image[n]);
    return out;
  }

  Permutation power(std::size_t k) const {
    Permutation acc(dim());
    Permutation base = *this;
    while (k > 0) {
      if (k & 1) acc = acc.then(base);
      base = base.then(base);
      k >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (std::size_t n = 0; n < dim(); ++n)
      if (image[n] != n) return false;
    return true;
  }

  bool is_involution() const {
    for (std::size_t n = 0; n < dim(); ++n)
      if (image[image[n]] != n) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (std::size_t n = 0; n < dim(); ++n)
      if (image[n] == n) return true;
    return false;
  }

  std::vector<std::size_t> cycle_lengths() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(dim(), false);
    for (std::size_t n = 0; n < dim(); ++n) {
      if (seen[n]) continue;
      std::size_t len = 0, cur = n;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = image[cur];
        ++len;
      }
      lengths.push_back(len);
    }
    return lengths;
  }

  /// Column n of the matrix carries a one in row image[n].
  DenseOperator to_dense() const {
    DenseOperator out(dim());
    for (std::size_t n = 0; n < dim(); ++n) out.at(image[n], n) = cplx{1.0, 0.0};
    out.unitary = true;
    return out;
  }

  StateVector apply(const StateVector& v) const {
    require_same_dim(dim(), v.dim(), "Permutation::apply");
    StateVector out(dim());
    for (std::size_t n = 0; n < dim(); ++n) out.amplitudes[image[n]] = v.amplitudes[n];
    out.normalized = v.normalized;
    return out;
  }
};

/// U -> P^{-1} U P as an exact index relabeling of the dense entries.
inline DenseOperator conjugate_by_permutation(const DenseOperator& u, const Permutation& p) {
  require_same_dim(u.dim(), p.dim(), "conjugate_by_permutation");
  DenseOperator out(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) out.at(r, c) = u.at(p(r), p(c));
  out.unitary = u.unitary;
  return out;
}

/// ||U P - P U||_max without materializing the permutation matrix.
inline double permutation_commutator_norm(const DenseOperator& u, const Permutation& p) {
  require_same_dim(u.dim(), p.dim(), "permutation_commutator_norm");
  const Permutation inv = p.inverse();
  double worst = 0.0;
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) {
      // (U P)[r, c] = U[r, p(c)],  (P U)[r, c] = U[p^{-1}(r), c]
      const cplx d = u.at(r, p(c)) - u.at(inv(r), c);
      worst = std::max(worst, std::abs(d));
    }
  return worst;
}

}  // namespace qshift
