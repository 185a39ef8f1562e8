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

/// Fidelity decay of the initial state |1> under the perturbed shift,
///   f(t) = |<2^t mod (N-1)| S(theta; alpha, P)^t |1>|^2,
/// together with the piecewise-exponential model of the decay, shoulder
/// detection, and the interaction-picture cross-check.

#pragma once

#include <cmath>
#include <optional>

#include "qshift/numtheory.hpp"
#include "qshift/perturbation.hpp"

namespace qshift {

struct ShoulderParams {
  std::size_t window = 5;  // half-width of the local slope stencil
  double factor = 1.5;     // slope steepening ratio that flags a shoulder
};

struct FidelityTrace {
  std::size_t n = 0;
  PerturbationSpec spec;
  std::vector<double> f;        // f[t], t = 0..T; f[0] = 1 exactly
  std::vector<double> f_model;  // model values on the same grid
  std::uint64_t k0 = 0;
  bool half_order_is_minus_one = false;
  std::uint64_t predicted_shoulder = 0;
  std::vector<std::size_t> shoulders;  // detected shoulder times
  bool too_short = false;
};

/// Piecewise-exponential fidelity model for an M_bits-qubit register:
///   f(t) = cos^2(r theta)^{(r+1)M - t} * cos^2((r+1) theta)^{t - rM},
/// r = floor(t/M). Exact for the idealized bit-local perturbation; continuous
/// at every knot t = rM.
inline double model_fidelity(double theta, unsigned m_bits, std::uint64_t t) {
  if (m_bits < 1) throw std::invalid_argument("model_fidelity: M_bits must be >= 1");
  const std::uint64_t m = m_bits;
  const std::uint64_t r = t / m;
  const double base_lo = std::pow(std::cos(static_cast<double>(r) * theta), 2);
  const double base_hi = std::pow(std::cos(static_cast<double>(r + 1) * theta), 2);
  const double e_lo = static_cast<double>((r + 1) * m - t);
  const double e_hi = static_cast<double>(t - r * m);
  const double lo = (e_lo == 0.0) ? 1.0 : std::pow(std::abs(base_lo), e_lo);
  const double hi = (e_hi == 0.0) ? 1.0 : std::pow(std::abs(base_hi), e_hi);
  return lo * hi;
}

/// Bits needed to hold dimension N: M = ceil(log2 N).
inline unsigned model_bits(std::size_t n) {
  unsigned m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return m;
}

struct ShoulderDetection {
  std::vector<std::size_t> times;
  bool too_short = false;
};

/// Scans the log-fidelity for decay-regime changes between the trailing and
/// leading +-window stencils: either the decay rate steepens by at least
/// `factor`, or the slope reverses sign (the recovery pattern the sigma_z
/// family shows at half-order times). Contiguous candidate runs are collapsed
/// to the strongest point of each run.
inline ShoulderDetection detect_shoulders(const std::vector<double>& f,
                                          std::uint64_t predicted_shoulder,
                                          const ShoulderParams& params = {}) {
  ShoulderDetection out;
  const std::size_t w = params.window;
  if (w < 1) throw std::invalid_argument("detect_shoulders: window must be >= 1");
  if (f.size() <= 2 * w) {
    out.too_short = true;
    return out;
  }
  if (predicted_shoulder > 0 && f.size() < 3 * predicted_shoulder) out.too_short = true;

  constexpr double kFloor = 1e-280;      // keep log() finite
  constexpr double kSlopeMin = 1e-9;     // below this the trace counts as flat
  std::vector<double> g(f.size());
  std::size_t t_hi = f.size() - 1;
  for (std::size_t t = 0; t < f.size(); ++t) {
    g[t] = std::log(std::max(f[t], kFloor));
    if (f[t] <= 1e-250 && t < t_hi) t_hi = (t > 0) ? t - 1 : 0;
  }

  std::vector<std::pair<std::size_t, double>> run;  // (time, regime-change score)
  const auto flush = [&]() {
    if (run.empty()) return;
    std::size_t best = run.front().first;
    double best_score = run.front().second;
    for (const auto& [t, score] : run)
      if (score > best_score) {
        best_score = score;
        best = t;
      }
    out.times.push_back(best);
    run.clear();
  };

  for (std::size_t t = w; t + w <= t_hi; ++t) {
    const double sl = (g[t] - g[t - w]) / static_cast<double>(w);
    const double sr = (g[t + w] - g[t]) / static_cast<double>(w);
    const bool decaying_after = sr < -kSlopeMin;
    const bool flat_before = sl > -kSlopeMin;
    const bool steepened = decaying_after && (flat_before || sr <= params.factor * sl);
    const bool reversed = (sl < -kSlopeMin && sr > kSlopeMin) || (sl > kSlopeMin && sr < -kSlopeMin);
    if (steepened || reversed) {
      // steepening: rank by slope ratio, which is maximal at the knot;
      // reversal: rank by slope contrast, maximal at the turning point.
      const double score =
          steepened ? -sr / std::max(std::abs(sl), kSlopeMin) : std::abs(sr - sl);
      if (!run.empty() && run.back().first + 1 != t) flush();
      run.emplace_back(t, score);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

/// Evolves |1> one application per step with the factored operator; the
/// reference label 2^t mod (N-1) comes from modular arithmetic, never from
/// dense powers of S.
inline FidelityTrace fidelity_trace(std::size_t n, const PerturbationSpec& spec, std::size_t T,
                                    const ShoulderParams& params = {}) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("fidelity_trace: N must be even and >= 4");
  if (T < 1) throw std::invalid_argument("fidelity_trace: T must be >= 1");

  FidelityTrace trace;
  trace.n = n;
  trace.spec = spec;
  const OrderInfo info = multiplicative_order(static_cast<std::uint64_t>(n - 1));
  trace.k0 = info.order;
  trace.half_order_is_minus_one = info.half_order_is_minus_one;
  trace.predicted_shoulder = info.half_order_is_minus_one ? info.order / 2 : info.order;

  const FactoredOperator op = build_perturbed_factored(n, spec);
  StateVector psi = StateVector::basis(n, 1);
  const std::uint64_t modulus = n - 1;
  std::uint64_t label = 1;

  const unsigned mb = model_bits(n);
  trace.f.resize(T + 1);
  trace.f_model.resize(T + 1);
  trace.f[0] = 1.0;
  trace.f_model[0] = 1.0;
  for (std::size_t t = 1; t <= T; ++t) {
    psi = op.apply(psi);
    label = (2 * label) % modulus;
    trace.f[t] = std::norm(psi.amplitudes[label]);
    trace.f_model[t] = model_fidelity(spec.theta, mb, t);
  }

  ShoulderDetection det = detect_shoulders(trace.f, trace.predicted_shoulder, params);
  trace.shoulders = std::move(det.times);
  trace.too_short = det.too_short;
  return trace;
}

/// C = F_2L^-1(a,a) (M (x) I_L) F_2L(a,a) for a 2x2 qubit operator M.
inline DenseOperator conjugate_qubit_by_fourier(const Mat2& m, std::size_t L, double alpha) {
  const std::size_t n = 2 * L;
  const PhasedFourier f(n, alpha, alpha);
  DenseOperator c(n);
  std::vector<cplx> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), cplx{});
    col[j] = cplx{1.0, 0.0};
    f.apply(col, false);
    for (std::size_t k = 0; k < L; ++k) {
      const cplx x = col[k], y = col[L + k];
      col[k] = m.a * x + m.b * y;
      col[L + k] = m.c * x + m.d * y;
    }
    f.apply(col, true);
    for (std::size_t r = 0; r < n; ++r) c.at(r, j) = col[r];
  }
  c.unitary = true;
  return c;
}

/// The perturbation operator V(theta) = F^-1(a,a)(e^{-i theta P} (x) I_L)F(a,a).
inline DenseOperator build_perturbation_v(std::size_t n, const PerturbationSpec& spec) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_perturbation_v: N must be even and >= 4");
  return conjugate_qubit_by_fourier(pauli_rotation(spec.pauli, spec.theta), n / 2, spec.alpha);
}

struct InteractionPictureReport {
  std::vector<double> fidelity_deviation;  // |f_product(t) - f_trace(t)| per requested t
  double v_order_deviation = 0.0;          // ||V_{k0} - V||_max
  std::optional<double> v_half_deviation;  // ||V_{k0/2} - R'^-1 V R'||_max when defined
};

/// Verifies f(t) = |<1| V_t V_{t-1} ... V_1 |1>|^2 with V_l = S^-l V S^l
/// against the forward-evolution trace, plus the period identities of the
/// interaction-picture factors.
inline InteractionPictureReport interaction_picture_check(std::size_t n,
                                                          const PerturbationSpec& spec,
                                                          const std::vector<std::size_t>& times,
                                                          std::size_t dense_cap = 512) {
  if (n > dense_cap)
    throw std::invalid_argument("interaction_picture_check: N exceeds dense-product cap");
  const ShiftOperator s = build_shift(n);
  const DenseOperator v = build_perturbation_v(n, spec);

  std::size_t t_max = 0;
  for (std::size_t t : times) t_max = std::max(t_max, t);
  const FidelityTrace trace = fidelity_trace(n, spec, std::max<std::size_t>(t_max, 1));

  InteractionPictureReport report;
  std::vector<double> f_product(t_max + 1, 1.0);
  StateVector psi = StateVector::basis(n, 1);
  Permutation s_l(n);  // S^l, updated incrementally
  for (std::size_t l = 1; l <= t_max; ++l) {
    s_l = s_l.then(s.perm);
    StateVector y = s_l.apply(psi);
    y = apply(v, y);
    psi = s_l.inverse().apply(y);
    f_product[l] = std::norm(psi.amplitudes[1]);
  }
  report.fidelity_deviation.reserve(times.size());
  for (std::size_t t : times)
    report.fidelity_deviation.push_back(std::abs(f_product[t] - trace.f[t]));

  const OrderInfo info = multiplicative_order(static_cast<std::uint64_t>(n - 1));
  const Permutation s_k0 = s.perm.power(info.order);
  report.v_order_deviation = max_norm_diff(conjugate_by_permutation(v, s_k0), v);
  if (info.half_order_is_minus_one) {
    const Permutation s_half = s.perm.power(info.order / 2);
    const Permutation r_prime = build_half_order_op(n);
    report.v_half_deviation =
        max_norm_diff(conjugate_by_permutation(v, s_half), conjugate_by_permutation(v, r_prime));
  }
  return report;
}

/// Oscillation period of a linearly detrended series, read off the first
/// strong extremum of its autocorrelation. An oscillation that alternates
/// between extremes every p steps produces autocorrelation extrema at lags
/// p, 2p, ...; the first one is reported whether it is a correlation peak
/// (bump-train signal) or an anti-correlation trough (sign-alternating
/// signal). Used on post-shoulder fidelity traces.
inline std::size_t dominant_period(const std::vector<double>& series, std::size_t lag_min,
                                   std::size_t lag_max) {
  const std::size_t n = series.size();
  if (n < 4 || lag_min < 1 || lag_min > lag_max)
    throw std::invalid_argument("dominant_period: bad arguments");
  lag_max = std::min(lag_max, n - 2);

  // least-squares detrend
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    sx += x;
    sy += series[i];
    sxx += x * x;
    sxy += x * series[i];
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  const double slope = (denom != 0.0) ? (static_cast<double>(n) * sxy - sx * sy) / denom : 0.0;
  const double intercept = (sy - slope * sx) / static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = series[i] - (intercept + slope * static_cast<double>(i));

  double norm0 = 0.0;
  for (double v : x) norm0 += v * v;
  if (norm0 == 0.0) return lag_min;

  std::vector<double> abs_rho(lag_max + 2, 0.0);
  for (std::size_t lag = 1; lag <= std::min(lag_max + 1, n - 2); ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += x[i] * x[i + lag];
    abs_rho[lag] = std::abs(acc / norm0);
  }

  double best_peak = 0.0;
  for (std::size_t lag = std::max<std::size_t>(lag_min, 2); lag <= lag_max; ++lag)
    if (abs_rho[lag] >= abs_rho[lag - 1] && abs_rho[lag] >= abs_rho[lag + 1])
      best_peak = std::max(best_peak, abs_rho[lag]);

  for (std::size_t lag = std::max<std::size_t>(lag_min, 2); lag <= lag_max; ++lag)
    if (abs_rho[lag] >= abs_rho[lag - 1] && abs_rho[lag] >= abs_rho[lag + 1] &&
        abs_rho[lag] >= 0.5 * best_peak && best_peak > 0.0)
      return lag;

  // no structured extremum: fall back to the strongest lag in the band
  std::size_t best_lag = lag_min;
  double best = -1.0;
  for (std::size_t lag = lag_min; lag <= lag_max; ++lag)
    if (abs_rho[lag] > best) {
      best = abs_rho[lag];
      best_lag = lag;
    }
  return best_lag;
}

}  // namespace qshift
