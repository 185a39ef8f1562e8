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
#include <numeric>

#include <Eigen/Dense>

#include "qshift/dense_operator.hpp"

namespace qshift {

struct UnitaryEigensystem {
  std::vector<double> phases;     // ascending, in [0, 2 pi)
  std::vector<double> residuals;  // ||U v - e^{i phase} v||_2 per eigenpair
};

/// Eigenphases of a unitary operator via complex Schur decomposition. A
/// unitary matrix is normal, so the Schur form is diagonal and the Schur
/// vectors are eigenvectors even when the spectrum is highly degenerate
/// (the unperturbed shift operator is the extreme case). Residuals are
/// measured directly against the input matrix, not inferred from the
/// factorization.
inline UnitaryEigensystem eigenphases(const DenseOperator& u, std::size_t cap = 2048,
                                      double unitarity_tol = 1e-8, double residual_tol = 1e-8) {
  if (u.dim() > cap)
    throw std::invalid_argument("eigenphases: dimension " + std::to_string(u.dim()) +
                                " exceeds solver cap " + std::to_string(cap));
  const double defect = u.unitarity_defect();
  if (defect > unitarity_tol)
    throw std::invalid_argument("eigenphases: input is not unitary (defect " +
                                std::to_string(defect) + ")");

  const Eigen::MatrixXcd a = u.map();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("eigenphases: Schur decomposition did not converge");
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::VectorXcd lambda = schur.matrixT().diagonal();

  Eigen::MatrixXcd resid = a * q;
  resid.noalias() -= q * lambda.asDiagonal();

  const std::size_t n = u.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> phase(n);
  for (std::size_t k = 0; k < n; ++k) {
    double p = std::arg(lambda[static_cast<Eigen::Index>(k)]);
    if (p < 0.0) p += two_pi;
    if (p >= two_pi) p = 0.0;
    phase[k] = p;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return phase[i] < phase[j]; });

  UnitaryEigensystem out;
  out.phases.reserve(n);
  out.residuals.reserve(n);
  for (std::size_t k : order) {
    const double r = resid.col(static_cast<Eigen::Index>(k)).norm();
    if (r > residual_tol)
      throw std::runtime_error("eigenphases: eigenpair residual " + std::to_string(r) +
                               " exceeds tolerance");
    out.phases.push_back(phase[k]);
    out.residuals.push_back(r);
  }

  // completeness: the phase multiset must reproduce the trace
  cplx phase_sum{};
  for (double p : out.phases) phase_sum += std::polar(1.0, p);
  if (std::abs(phase_sum - a.trace()) > 1e-6 * static_cast<double>(n))
    throw std::runtime_error("eigenphases: phase multiset does not reproduce the trace");
  return out;
}

}  // namespace qshift
