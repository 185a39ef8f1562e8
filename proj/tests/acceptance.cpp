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

/// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
/// line; the process exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "qshift/baker.hpp"
#include "qshift/classical_baker.hpp"
#include "qshift/fidelity.hpp"
#include "qshift/numtheory.hpp"
#include "qshift/perturbation.hpp"
#include "qshift/spectral.hpp"

using namespace qshift;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& label, const std::string& detail) {
  std::printf("[%2d/10] %s %s (%s)\n", index, pass ? "PASS" : "FAIL", label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double fit_slope(const std::vector<double>& y, std::size_t t0, std::size_t t1) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t t = t0; t <= t1; ++t) {
    const double x = static_cast<double>(t);
    sx += x;
    sy += y[t];
    sxx += x * x;
    sxy += y[t] * x;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool contains_near(const std::vector<std::size_t>& times, std::size_t want, std::size_t slack) {
  for (std::size_t t : times)
    if (t + slack >= want && t <= want + slack) return true;
  return false;
}

// 2^k mod m by literal repeated doubling, independent of mod_pow
std::uint64_t doubling(std::uint64_t k, std::uint64_t m) {
  std::uint64_t cur = 1 % m;
  for (std::uint64_t i = 0; i < k; ++i) cur = (cur * 2) % m;
  return cur;
}

std::uint64_t order_by_doubling(std::uint64_t m) {
  std::uint64_t cur = 2 % m, k = 1;
  while (cur != 1) {
    cur = (cur * 2) % m;
    ++k;
  }
  return k;
}

void criterion_1_decomposition() {
  double worst = 0.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t n = 4; n <= 512; n += 2) {
    const DenseOperator s = build_shift(n).to_dense();
    for (double alpha : {0.0, 0.25, 0.5}) {
      const DenseOperator b = build_baker(BakerKind::standard, n / 2, alpha);
      const DenseOperator bp = build_baker(BakerKind::reverse_stacked, n / 2, alpha);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          worst = std::max(worst,
                           std::abs(s.at(r, c) - inv_sqrt2 * (b.at(r, c) + bp.at(r, c))));
    }
  }
  report(1, worst <= 1e-12, "decomposition S=(B+B')/sqrt(2), even N in [4,512]",
         "max deviation " + fmt(worst) + ", tol 1e-12");
}

void criterion_2_factored_form() {
  double worst = 0.0;
  for (std::size_t n : {4ul, 6ul, 8ul, 10ul, 16ul, 64ul, 250ul, 256ul}) {
    const DenseOperator s = build_shift(n).to_dense();
    for (double alpha : {0.0, 0.3, 0.5})
      worst = std::max(worst, max_norm_diff(build_shift_factored(n, alpha).materialize(), s));
  }
  report(2, worst <= 1e-10,
         "alpha-independent factored form matches the permutation (incl. N=6,10,250)",
         "max deviation " + fmt(worst) + ", tol 1e-10");
}

void criterion_3_sigma_x() {
  double worst_dev = 0.0;
  for (std::size_t L = 1; L <= 128; ++L)
    worst_dev = std::max(worst_dev, pauli_fourier_conjugate(Pauli::X, L, 0.0).second);
  const FidelityTrace tr = fidelity_trace(254, PerturbationSpec(0.3, 0.0, Pauli::X), 300);
  double worst_flat = 0.0;
  for (double f : tr.f) worst_flat = std::max(worst_flat, std::abs(f - 1.0));
  report(3, worst_dev <= 1e-12 && worst_flat <= 1e-10,
         "exact sigma_x identity (L<=128) and flat fidelity at N=254, T=300",
         "conjugation dev " + fmt(worst_dev) + " (tol 1e-12), |f-1| " + fmt(worst_flat) +
             " (tol 1e-10)");
}

void criterion_4_order_table() {
  bool pass = multiplicative_order(253).order == 110 && multiplicative_order(255).order == 8 &&
              multiplicative_order(251).order == 50 && multiplicative_order(249).order == 82;
  std::size_t checked = 0;
  for (std::uint64_t m = 3; m < 4096 && pass; m += 2) {
    pass = multiplicative_order(m).order == order_by_doubling(m);
    ++checked;
  }
  report(4, pass, "order table k0(253)=110, k0(255)=8, k0(251)=50, k0(249)=82",
         "oracle cross-check over " + std::to_string(checked) + " odd moduli < 4096");
}

void criterion_5_half_order() {
  const ShiftOperator s = build_shift(252);
  const bool perm_equal = (s.perm.power(25) == build_half_order_op(252));
  const bool condition = (doubling(25, 251) == 250);
  const InteractionPictureReport ip =
      interaction_picture_check(252, PerturbationSpec(0.05, 0.0, Pauli::Y), {1});
  const bool v_half = ip.v_half_deviation.has_value() && *ip.v_half_deviation <= 1e-12;
  report(5, perm_equal && condition && v_half,
         "half-order operator: S^25 = R' at N=252 and V_25 = R'^-1 V R'",
         std::string("S^25=R' ") + (perm_equal ? "exact" : "BROKEN") + ", V_25 deviation " +
             (ip.v_half_deviation ? fmt(*ip.v_half_deviation) : "n/a") + " (tol 1e-12)");
}

void criterion_6_shoulders() {
  bool pass = true;
  std::string detail;
  const double want_slope = std::log(std::pow(std::cos(0.05), 2));
  for (std::size_t n : {250ul, 252ul, 254ul, 256ul}) {
    const std::size_t pred = predict_shoulder(n);
    const std::size_t T = std::max<std::size_t>(3 * pred + 15, 40);
    const FidelityTrace tr = fidelity_trace(n, PerturbationSpec(0.05, 0.0, Pauli::Y), T);
    const bool found = contains_near(tr.shoulders, pred, 2);

    std::vector<double> lg(tr.f.size());
    for (std::size_t t = 0; t < tr.f.size(); ++t) lg[t] = std::log(std::max(tr.f[t], 1e-300));
    const std::size_t hi = std::min<std::size_t>(model_bits(n), pred) - 2;
    const double slope = fit_slope(lg, 2, hi);
    const bool slope_ok = std::abs(slope - want_slope) / std::abs(want_slope) <= 0.20;

    pass = pass && found && slope_ok;
    detail += "N=" + std::to_string(n) + ":" + (found ? "" : "MISSED ") +
              std::to_string(pred) + "/" + fmt(std::abs(slope - want_slope) / std::abs(want_slope)) + " ";
  }
  report(6, pass, "sigma_y shoulders at {41,25,110,8} +-2 with early slope log cos^2(0.05) +-20%",
         detail + "(shoulder/slope-rel-err)");
}

void criterion_7_model() {
  const FidelityTrace tr256 = fidelity_trace(256, PerturbationSpec(0.05, 0.0, Pauli::Y), 30);
  double worst = 0.0;
  for (std::size_t t = 0; t <= 24; ++t)
    worst = std::max(worst, std::abs(tr256.f[t] - tr256.f_model[t]));

  const FidelityTrace tr254 = fidelity_trace(254, PerturbationSpec(0.05, 0.0, Pauli::Y), 345);
  const bool shoulder_254 = contains_near(tr254.shoulders, 110, 2);

  report(7, worst <= 0.1 && shoulder_254,
         "model agreement at N=256 (t<=24, tol 0.1); N=254 shoulder location only",
         "max |f-f_model| " + fmt(worst) + ", N=254 shoulder " +
             (shoulder_254 ? "within +-2" : "MISSED"));
}

void criterion_8_sigma_z_oscillations() {
  bool pass = true;
  std::string detail;
  for (std::size_t n : {250ul, 252ul}) {
    const std::size_t half = predict_shoulder(n);  // k0/2 for both
    const std::size_t T = half * 6 + 20;
    const FidelityTrace tr = fidelity_trace(n, PerturbationSpec(0.05, 0.0, Pauli::Z), T);
    std::vector<double> post;
    for (std::size_t t = half + 1; t < tr.f.size(); ++t)
      post.push_back(std::log(std::max(tr.f[t], 1e-300)));
    const std::size_t period = dominant_period(post, 3, post.size() / 2);
    const bool ok = (period + 2 >= half) && (period <= half + 2);
    pass = pass && ok;
    detail += "N=" + std::to_string(n) + ": period " + std::to_string(period) + " want " +
              std::to_string(half) + "+-2  ";
  }
  report(8, pass, "sigma_z post-shoulder autocorrelation peaks at k0/2", detail);
}

void criterion_9_spectral_statistics() {
  const Permutation parity = build_parity(510);
  const auto sector_stats = [&](double theta) {
    const DenseOperator u = build_perturbed(510, PerturbationSpec(theta, 0.5, Pauli::X));
    const DenseOperator even = desymmetrize(u, parity, Sector::even);
    return spacing_sample(even, Sector::even);
  };
  const SpacingSample strong = sector_stats(0.3);
  const SpacingSample weak = sector_stats(0.02);
  const double frac_small = fraction_below(strong.spacings, 0.1);
  const bool pass = strong.ks_goe < strong.ks_poisson && frac_small < 0.05 &&
                    weak.ks_goe > strong.ks_goe;
  report(9, pass, "even-sector statistics at N=510: GOE at theta=0.3, rigidity at theta=0.02",
         "ks_goe " + fmt(strong.ks_goe) + " < ks_poisson " + fmt(strong.ks_poisson) +
             ", P(s<0.1) " + fmt(frac_small) + " < 0.05, ks_goe(0.02) " + fmt(weak.ks_goe));
}

void criterion_10_synthetic_calibration() {
  const auto goe = sample_goe_spacings(10000, 12345);
  const double d_goe = ks_distance(goe, goe_cdf);
  const auto poisson = sample_poisson_spacings(10000, 12345);
  const double d_poisson = ks_distance(poisson, poisson_cdf);
  report(10, d_goe < 0.02 && d_poisson < 0.02,
         "synthetic inverse-CDF samplers match their references (10^4 draws)",
         "ks " + fmt(d_goe) + " / " + fmt(d_poisson) + ", tol 0.02");
}

}  // namespace

int main() {
  criterion_1_decomposition();
  criterion_2_factored_form();
  criterion_3_sigma_x();
  criterion_4_order_table();
  criterion_5_half_order();
  criterion_6_shoulders();
  criterion_7_model();
  criterion_8_sigma_z_oscillations();
  criterion_9_spectral_statistics();
  criterion_10_synthetic_calibration();
  if (failures == 0)
    std::printf("ACCEPTANCE: all 10 criteria passed\n");
  else
    std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
