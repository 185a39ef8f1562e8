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

/// Dense complex vectors and operators: the numerical substrate for every
/// unitary built in this library.

#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qshift {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// Complex amplitude vector of dimension N. The `normalized` flag tracks
/// whether the vector is known to have unit norm; raw vectors are allowed.
struct StateVector {
  std::vector<cplx> amplitudes;
  bool normalized = false;

  StateVector() = default;
  explicit StateVector(std::size_t dim) : amplitudes(dim, cplx{}) {}

  std::size_t dim() const { return amplitudes.size(); }

  static StateVector basis(std::size_t dim, std::size_t index) {
    if (dim < 2) throw std::invalid_argument("StateVector: dim must be >= 2");
    if (index >= dim) throw std::invalid_argument("StateVector: basis index out of range");
    StateVector v(dim);
    v.amplitudes[index] = cplx{1.0, 0.0};
    v.normalized = true;
    return v;
  }

  double norm() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }

  StateVector& normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("StateVector: cannot normalize zero vector");
    for (cplx& a : amplitudes) a /= n;
    normalized = true;
    return *this;
  }
};

/// Dense N x N complex matrix, row-major; row index = output basis label,
/// column index = input basis label. `unitary` is set once a constructor or
/// an explicit check has established ||U^dag U - I||_max <= tol.
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim) : dim_(dim), m_(dim * dim, cplx{}) {
    if (dim < 1) throw std::invalid_argument("DenseOperator: dim must be >= 1");
  }

  static DenseOperator identity(std::size_t dim) {
    DenseOperator id(dim);
    for (std::size_t i = 0; i < dim; ++i) id.at(i, i) = cplx{1.0, 0.0};
    id.unitary = true;
    return id;
  }

  std::size_t dim() const { return dim_; }

  cplx& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

  cplx* data() { return m_.data(); }
  const cplx* data() const { return m_.data(); }

  using EigenMap = Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  using ConstEigenMap =
      Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

  EigenMap map() { return EigenMap(m_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_)); }
  ConstEigenMap map() const {
    return ConstEigenMap(m_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  }

  /// ||U^dag U - I||_max.
  double unitarity_defect() const {
    Eigen::MatrixXcd g = map().adjoint() * map();
    double worst = 0.0;
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{};
        worst = std::max(worst, std::abs(g(r, c) - want));
      }
    return worst;
  }

  /// Sets the unitary flag after an explicit defect check; throws if above tol.
  DenseOperator& mark_unitary(double tol = 1e-10) {
    const double defect = unitarity_defect();
    if (defect > tol)
      throw std::domain_error("DenseOperator: unitarity defect " + std::to_string(defect) +
                              " exceeds tolerance");
    unitary = true;
    return *this;
  }

  bool unitary = false;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> m_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

/// Matrix product a*b.
inline DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  DenseOperator out(a.dim());
  out.map().noalias() = a.map() * b.map();
  out.unitary = a.unitary && b.unitary;
  return out;
}

inline DenseOperator adjoint(const DenseOperator& a) {
  DenseOperator out(a.dim());
  out.map() = a.map().adjoint();
  out.unitary = a.unitary;
  return out;
}

inline StateVector apply(const DenseOperator& op, const StateVector& v) {
  require_same_dim(op.dim(), v.dim(), "apply");
  StateVector out(v.dim());
  Eigen::Map<Eigen::VectorXcd> y(out.amplitudes.data(), static_cast<Eigen::Index>(v.dim()));
  Eigen::Map<const Eigen::VectorXcd> x(v.amplitudes.data(), static_cast<Eigen::Index>(v.dim()));
  y.noalias() = op.map() * x;
  out.normalized = v.normalized && op.unitary;
  return out;
}

/// q (x) I_L with the qubit as the most-significant factor: row/col n = L*i + k,
/// i in {0,1} the qubit label. Matches the 2x2 block layout used throughout.
inline DenseOperator kron2(const cplx q00, const cplx q01, const cplx q10, const cplx q11,
                           std::size_t L) {
  if (L < 1) throw std::invalid_argument("kron2: L must be >= 1");
  DenseOperator out(2 * L);
  for (std::size_t k = 0; k < L; ++k) {
    out.at(k, k) = q00;
    out.at(k, L + k) = q01;
    out.at(L + k, k) = q10;
    out.at(L + k, L + k) = q11;
  }
  return out;
}

/// Assembles [[A, B], [C, D]] from four L x L blocks.
inline DenseOperator block2x2(const DenseOperator& a, const DenseOperator& b,
                              const DenseOperator& c, const DenseOperator& d) {
  const std::size_t L = a.dim();
  require_same_dim(L, b.dim(), "block2x2");
  require_same_dim(L, c.dim(), "block2x2");
  require_same_dim(L, d.dim(), "block2x2");
  DenseOperator out(2 * L);
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t c2 = 0; c2 < L; ++c2) {
      out.at(r, c2) = a.at(r, c2);
      out.at(r, L + c2) = b.at(r, c2);
      out.at(L + r, c2) = c.at(r, c2);
      out.at(L + r, L + c2) = d.at(r, c2);
    }
  return out;
}

/// Max-norm of the entrywise difference.
inline double max_norm_diff(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a.dim(), b.dim(), "max_norm_diff");
  double worst = 0.0;
  const std::size_t n2 = a.dim() * a.dim();
  for (std::size_t i = 0; i < n2; ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

inline double max_abs_entry(const DenseOperator& a) {
  double worst = 0.0;
  const std::size_t n2 = a.dim() * a.dim();
  for (std::size_t i = 0; i < n2; ++i) worst = std::max(worst, std::abs(a.data()[i]));
  return worst;
}

}  // namespace qshift
