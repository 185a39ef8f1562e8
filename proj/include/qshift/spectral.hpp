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

/// Parity desymmetrization, nearest-neighbor spacing statistics of unitary
/// spectra, and Kolmogorov-Smirnov comparison against the Wigner-Dyson (GOE)
/// surmise and the Poisson reference.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "qshift/eigenphases.hpp"
#include "qshift/permutation.hpp"

namespace qshift {

enum class Sector { even, odd, full };

inline const char* sector_name(Sector s) {
  switch (s) {
    case Sector::even: return "even";
    case Sector::odd: return "odd";
    default: return "full";
  }
}

/// Projects a parity-commuting unitary onto one parity sector in the basis
/// e_n^+- = (|n> +- |p(n)>)/sqrt(2), with representatives n < p(n). The
/// parity must be an involutive permutation without fixed points and commute
/// with u to within commutator_tol.
inline DenseOperator desymmetrize(const DenseOperator& u, const Permutation& parity, Sector sector,
                                  double commutator_tol = 1e-10) {
  require_same_dim(u.dim(), parity.dim(), "desymmetrize");
  if (sector == Sector::full) return u;
  if (!parity.is_involution() || parity.has_fixed_point())
    throw std::invalid_argument("desymmetrize: parity must be a fixed-point-free involution");
  const double comm = permutation_commutator_norm(u, parity);
  if (comm > commutator_tol)
    throw std::invalid_argument("desymmetrize: operator does not commute with parity (norm " +
                                std::to_string(comm) + "); use the full spectrum");

  std::vector<std::size_t> reps;
  reps.reserve(u.dim() / 2);
  for (std::size_t n = 0; n < u.dim(); ++n)
    if (n < parity(n)) reps.push_back(n);

  const double sign = (sector == Sector::even) ? 1.0 : -1.0;
  DenseOperator out(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::size_t a = reps[i], pa = parity(a);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const std::size_t b = reps[j], pb = parity(b);
      out.at(i, j) = 0.5 * ((u.at(a, b) + u.at(pa, pb)) + sign * (u.at(a, pb) + u.at(pa, b)));
    }
  }
  out.unitary = u.unitary;
  return out;
}

/// Wigner-Dyson (GOE) surmise, P(s) = (pi s/2) exp(-pi s^2/4).
inline double goe_pdf(double s) { return 0.5 * pi * s * std::exp(-0.25 * pi * s * s); }
inline double goe_cdf(double s) { return 1.0 - std::exp(-0.25 * pi * s * s); }

inline double poisson_pdf(double s) { return std::exp(-s); }
inline double poisson_cdf(double s) { return 1.0 - std::exp(-s); }

/// Kolmogorov-Smirnov distance between a sample and a reference CDF.
template <typename Cdf>
inline double ks_distance(std::vector<double> sample, Cdf&& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double c = cdf(sample[i]);
    worst = std::max(worst, std::abs(c - static_cast<double>(i) / n));
    worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - c));
  }
  return worst;
}

inline double fraction_below(const std::vector<double>& sample, double threshold) {
  if (sample.empty()) return 0.0;
  std::size_t count = 0;
  for (double s : sample)
    if (s < threshold) ++count;
  return static_cast<double>(count) / static_cast<double>(sample.size());
}

/// Unfolded nearest-neighbor spacings of a unitary spectrum. For eigenangles
/// the mean density is uniform on the circle, so the rescale by d/(2 pi) is
/// exact; the wraparound gap is included so the spacing count equals the
/// dimension. Degenerate (zero) spacings are kept.
struct SpacingSample {
  std::size_t dim = 0;
  Sector sector = Sector::full;
  std::vector<double> spacings;  // mean-normalized, one per eigenphase
  double ks_goe = 0.0;
  double ks_poisson = 0.0;
};

inline SpacingSample spacing_sample(const DenseOperator& u_sub, Sector sector = Sector::full,
                                    std::size_t cap = 2048) {
  const UnitaryEigensystem eig = eigenphases(u_sub, cap);
  const std::size_t d = eig.phases.size();
  if (d < 2) throw std::invalid_argument("spacing_sample: need dimension >= 2");
  SpacingSample out;
  out.dim = d;
  out.sector = sector;
  out.spacings.resize(d);
  const double scale = static_cast<double>(d) / two_pi;
  for (std::size_t i = 0; i + 1 < d; ++i)
    out.spacings[i] = (eig.phases[i + 1] - eig.phases[i]) * scale;
  out.spacings[d - 1] = (eig.phases[0] + two_pi - eig.phases[d - 1]) * scale;
  out.ks_goe = ks_distance(out.spacings, goe_cdf);
  out.ks_poisson = ks_distance(out.spacings, poisson_cdf);
  return out;
}

/// Deterministic 53-bit uniform draws (independent of library distribution
/// implementations, so outputs are reproducible across platforms).
inline double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF samplers for the two reference distributions; used to
/// calibrate the statistics pipeline independently of any operator.
inline std::vector<double> sample_goe_spacings(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  for (double& s : out) s = std::sqrt(-4.0 / pi * std::log1p(-uniform53(rng)));
  return out;
}

inline std::vector<double> sample_poisson_spacings(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  for (double& s : out) s = -std::log1p(-uniform53(rng));
  return out;
}

/// Density-normalized histogram over [0, s_max] with reference curves at the
/// bin centers. Normalization uses the full sample size, so the histogram
/// integrates to the in-range fraction (one, when s_max covers the sample).
struct SpacingHistogram {
  std::vector<double> centers;
  std::vector<double> density;
  std::vector<double> goe;
  std::vector<double> poisson;
};

inline SpacingHistogram histogram(const std::vector<double>& spacings, std::size_t bins,
                                  double s_max) {
  if (bins < 4) throw std::invalid_argument("histogram: need at least 4 bins");
  if (!(s_max > 0.0)) throw std::invalid_argument("histogram: s_max must be positive");
  if (spacings.empty()) throw std::invalid_argument("histogram: empty sample");
  SpacingHistogram h;
  h.centers.resize(bins);
  h.density.assign(bins, 0.0);
  h.goe.resize(bins);
  h.poisson.resize(bins);
  const double width = s_max / static_cast<double>(bins);
  for (double s : spacings) {
    if (s < 0.0 || s >= s_max) continue;
    h.density[static_cast<std::size_t>(s / width)] += 1.0;
  }
  const double norm = 1.0 / (static_cast<double>(spacings.size()) * width);
  for (std::size_t b = 0; b < bins; ++b) {
    h.density[b] *= norm;
    h.centers[b] = (static_cast<double>(b) + 0.5) * width;
    h.goe[b] = goe_pdf(h.centers[b]);
    h.poisson[b] = poisson_pdf(h.centers[b]);
  }
  return h;
}

}  // namespace qshift
