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

/// The reproducible experiments behind the CLI subcommands: the exact
/// identity suite, fidelity traces, spacing statistics, and order lookups.
/// Outputs are CSV (header row plus a '#' config comment) and JSON with
/// stable key order; identical configs produce byte-identical files.

#pragma once

#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qshift/baker.hpp"
#include "qshift/fidelity.hpp"
#include "qshift/io.hpp"
#include "qshift/spectral.hpp"

namespace qshift {

using json = nlohmann::ordered_json;

inline Pauli parse_pauli(const std::string& s) {
  if (s == "x" || s == "X") return Pauli::X;
  if (s == "y" || s == "Y") return Pauli::Y;
  if (s == "z" || s == "Z") return Pauli::Z;
  throw std::invalid_argument("pauli must be one of x, y, z");
}

inline Sector parse_sector(const std::string& s) {
  if (s == "even") return Sector::even;
  if (s == "odd") return Sector::odd;
  if (s == "full") return Sector::full;
  throw std::invalid_argument("sector must be one of even, odd, full");
}

// ---------------------------------------------------------------------------
// verify: exact identity suite
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::vector<double> alphas{0.0, 0.25, 0.5};
  std::size_t n_min = 4;
  std::size_t n_max = 256;
  double theta = 0.3;  // perturbation strength for the parity-commutation check
  bool inject_fault = false;
  std::string out;  // optional JSON report path
};

struct VerifyCheck {
  double max_deviation = 0.0;
  double tolerance = 1e-10;
  bool pass = true;
};

/// Runs the decomposition, factored-form/alpha-independence, sigma_x
/// conjugation, and parity commutation identities over an even-N grid.
/// Returns 0 when every deviation is within tolerance, 1 otherwise.
inline int run_verify(const VerifyConfig& cfg, std::ostream& log) {
  if (cfg.n_min < 4 || cfg.n_min % 2 != 0 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("verify: need even n_min >= 4 and n_max >= n_min");
  if (cfg.alphas.empty()) throw std::invalid_argument("verify: need at least one alpha");

  VerifyCheck decomposition, factored, sigma_x, parity;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  bool fault_pending = cfg.inject_fault;

  for (std::size_t n = cfg.n_min; n <= cfg.n_max; n += 2) {
    const std::size_t L = n / 2;
    const DenseOperator s_dense = build_shift(n).to_dense();

    for (double alpha : cfg.alphas) {
      DenseOperator b = build_baker(BakerKind::standard, L, alpha);
      const DenseOperator bp = build_baker(BakerKind::reverse_stacked, L, alpha);
      if (fault_pending) {
        b.at(0, 0) += 1e-6;  // --self-test-fault: prove the harness can fail
        fault_pending = false;
      }
      double dev = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          dev = std::max(dev,
                         std::abs(s_dense.at(r, c) - inv_sqrt2 * (b.at(r, c) + bp.at(r, c))));
      decomposition.max_deviation = std::max(decomposition.max_deviation, dev);

      const DenseOperator from_factored = build_shift_factored(n, alpha).materialize();
      factored.max_deviation =
          std::max(factored.max_deviation, max_norm_diff(from_factored, s_dense));
    }

    // the sigma_x conjugation identity is exact at alpha = 0 only
    sigma_x.max_deviation =
        std::max(sigma_x.max_deviation, pauli_fourier_conjugate(Pauli::X, L, 0.0).second);

    const Permutation r = build_parity(n);
    const ShiftOperator s = build_shift(n);
    if (!(s.perm.then(r) == r.then(s.perm))) parity.max_deviation = 1.0;
    const DenseOperator perturbed = build_perturbed(n, PerturbationSpec(cfg.theta, 0.5, Pauli::X));
    parity.max_deviation =
        std::max(parity.max_deviation, permutation_commutator_norm(perturbed, r));
  }

  const auto finish = [&](const char* name, VerifyCheck& c) {
    c.pass = c.max_deviation <= c.tolerance;
    log << (c.pass ? "PASS " : "FAIL ") << name << ": max deviation "
        << format_double(c.max_deviation) << " (tol " << format_double(c.tolerance) << ")\n";
  };
  finish("decomposition S=(B+B')/sqrt(2)", decomposition);
  finish("factored form matches permutation (alpha-independent)", factored);
  finish("sigma_x Fourier conjugation", sigma_x);
  finish("parity commutation", parity);
  const bool pass =
      decomposition.pass && factored.pass && sigma_x.pass && parity.pass;

  json report;
  report["command"] = "verify";
  report["config"] = {{"alphas", cfg.alphas},
                      {"n_min", cfg.n_min},
                      {"n_max", cfg.n_max},
                      {"theta", cfg.theta},
                      {"self_test_fault", cfg.inject_fault}};
  const auto check_json = [](const VerifyCheck& c) {
    return json{{"max_deviation", c.max_deviation}, {"tolerance", c.tolerance}, {"pass", c.pass}};
  };
  report["checks"] = {{"decomposition", check_json(decomposition)},
                      {"factored_form", check_json(factored)},
                      {"sigma_x_conjugation", check_json(sigma_x)},
                      {"parity_commutation", check_json(parity)}};
  report["pass"] = pass;
  if (!cfg.out.empty()) atomic_write_file(cfg.out, report.dump(2) + "\n");

  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fidelity: per-N decay traces
// ---------------------------------------------------------------------------

struct FidelityConfig {
  std::vector<std::size_t> ns;
  double theta = 0.05;
  double alpha = 0.0;
  Pauli pauli = Pauli::Y;
  std::size_t trace_length = 300;
  ShoulderParams shoulder;
  std::string out_prefix = "fidelity";
};

inline std::string fidelity_config_comment(const FidelityConfig& cfg, std::size_t n) {
  std::ostringstream os;
  os << "# qshift fidelity N=" << n << " pauli=" << pauli_name(cfg.pauli)
     << " theta=" << format_double(cfg.theta) << " alpha=" << format_double(cfg.alpha)
     << " T=" << cfg.trace_length << " window=" << cfg.shoulder.window
     << " factor=" << format_double(cfg.shoulder.factor);
  return os.str();
}

inline json fidelity_sidecar(const FidelityTrace& trace, const FidelityConfig& cfg) {
  json j;
  j["N"] = trace.n;
  j["pauli"] = std::string(1, pauli_name(cfg.pauli));
  j["theta"] = cfg.theta;
  j["alpha"] = cfg.alpha;
  j["T"] = cfg.trace_length;
  j["k0"] = trace.k0;
  j["half_order_is_minus_one"] = trace.half_order_is_minus_one;
  j["predicted_shoulder"] = trace.predicted_shoulder;
  j["detected_shoulders"] = trace.shoulders;
  j["too_short"] = trace.too_short;
  return j;
}

/// Writes <prefix>_N<dim>.csv and <prefix>_N<dim>.json per requested N.
inline int run_fidelity(const FidelityConfig& cfg, std::ostream& log) {
  if (cfg.ns.empty()) throw std::invalid_argument("fidelity: need at least one N");
  if (cfg.trace_length < 1) throw std::invalid_argument("fidelity: T must be >= 1");
  for (std::size_t n : cfg.ns)
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("fidelity: N must be even and >= 4");

  const PerturbationSpec spec(cfg.theta, cfg.alpha, cfg.pauli);
  for (std::size_t n : cfg.ns) {
    const FidelityTrace trace = fidelity_trace(n, spec, cfg.trace_length, cfg.shoulder);
    std::ostringstream csv;
    csv << fidelity_config_comment(cfg, n) << "\n";
    csv << "t,f,f_model,flags\n";
    for (std::size_t t = 0; t < trace.f.size(); ++t) {
      const bool flagged =
          std::find(trace.shoulders.begin(), trace.shoulders.end(), t) != trace.shoulders.end();
      csv << t << ',' << format_double(trace.f[t]) << ',' << format_double(trace.f_model[t])
          << ',' << (flagged ? 1 : 0) << "\n";
    }
    const std::string base = cfg.out_prefix + "_N" + std::to_string(n);
    atomic_write_file(base + ".csv", csv.str());
    atomic_write_file(base + ".json", fidelity_sidecar(trace, cfg).dump(2) + "\n");
    log << "wrote " << base << ".csv (k0=" << trace.k0
        << ", predicted shoulder=" << trace.predicted_shoulder << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum: spacing statistics
// ---------------------------------------------------------------------------

enum class SyntheticKind { none, goe, poisson };

struct SpectrumConfig {
  std::size_t n = 510;
  double theta = 0.3;
  double alpha = 0.5;
  Pauli pauli = Pauli::X;
  Sector sector = Sector::even;
  std::size_t bins = 32;
  double s_max = 4.0;
  std::size_t cap = 2048;
  std::uint64_t seed = 12345;
  SyntheticKind synthetic = SyntheticKind::none;
  std::size_t draws = 10000;
  std::string out_prefix = "spectrum";
};

inline std::string spectrum_config_comment(const SpectrumConfig& cfg) {
  std::ostringstream os;
  if (cfg.synthetic == SyntheticKind::none) {
    os << "# qshift spectrum N=" << cfg.n << " pauli=" << pauli_name(cfg.pauli)
       << " theta=" << format_double(cfg.theta) << " alpha=" << format_double(cfg.alpha)
       << " sector=" << sector_name(cfg.sector);
  } else {
    os << "# qshift spectrum synthetic="
       << (cfg.synthetic == SyntheticKind::goe ? "goe" : "poisson") << " draws=" << cfg.draws
       << " seed=" << cfg.seed;
  }
  os << " bins=" << cfg.bins << " smax=" << format_double(cfg.s_max);
  return os.str();
}

/// Writes <prefix>_spacings.csv, <prefix>_hist.csv and <prefix>_ks.json.
/// Synthetic mode replaces the operator spectrum by inverse-CDF reference
/// draws, calibrating the statistics pipeline end to end.
inline int run_spectrum(const SpectrumConfig& cfg, std::ostream& log) {
  std::vector<double> spacings;
  json ks;
  ks["command"] = "spectrum";
  if (cfg.synthetic == SyntheticKind::none) {
    if (cfg.n < 4 || cfg.n % 2 != 0) throw std::invalid_argument("spectrum: N must be even >= 4");
    const std::size_t sub_dim = (cfg.sector == Sector::full) ? cfg.n : cfg.n / 2;
    if (sub_dim > cfg.cap)
      throw std::invalid_argument("spectrum: sector dimension " + std::to_string(sub_dim) +
                                  " exceeds solver cap " + std::to_string(cfg.cap) +
                                  "; raise --cap or shrink N");
    const DenseOperator u = build_perturbed(cfg.n, PerturbationSpec(cfg.theta, cfg.alpha, cfg.pauli));
    const DenseOperator u_sub = desymmetrize(u, build_parity(cfg.n), cfg.sector);
    const SpacingSample sample = spacing_sample(u_sub, cfg.sector, cfg.cap);
    spacings = sample.spacings;
    ks["N"] = cfg.n;
    ks["pauli"] = std::string(1, pauli_name(cfg.pauli));
    ks["theta"] = cfg.theta;
    ks["alpha"] = cfg.alpha;
    ks["sector"] = sector_name(cfg.sector);
    ks["dim"] = sample.dim;
    ks["ks_goe"] = sample.ks_goe;
    ks["ks_poisson"] = sample.ks_poisson;
  } else {
    if (cfg.draws < 1) throw std::invalid_argument("spectrum: draws must be >= 1");
    spacings = (cfg.synthetic == SyntheticKind::goe) ? sample_goe_spacings(cfg.draws, cfg.seed)
                                                     : sample_poisson_spacings(cfg.draws, cfg.seed);
    ks["synthetic"] = (cfg.synthetic == SyntheticKind::goe) ? "goe" : "poisson";
    ks["draws"] = cfg.draws;
    ks["seed"] = cfg.seed;
    ks["ks_goe"] = ks_distance(spacings, goe_cdf);
    ks["ks_poisson"] = ks_distance(spacings, poisson_cdf);
  }
  ks["fraction_below_0.1"] = fraction_below(spacings, 0.1);

  const std::string comment = spectrum_config_comment(cfg);
  std::ostringstream sp;
  sp << comment << "\n" << "index,spacing\n";
  for (std::size_t i = 0; i < spacings.size(); ++i)
    sp << i << ',' << format_double(spacings[i]) << "\n";
  atomic_write_file(cfg.out_prefix + "_spacings.csv", sp.str());

  const SpacingHistogram h = histogram(spacings, cfg.bins, cfg.s_max);
  std::ostringstream hist;
  hist << comment << "\n" << "s,density,goe,poisson\n";
  for (std::size_t b = 0; b < h.centers.size(); ++b)
    hist << format_double(h.centers[b]) << ',' << format_double(h.density[b]) << ','
         << format_double(h.goe[b]) << ',' << format_double(h.poisson[b]) << "\n";
  atomic_write_file(cfg.out_prefix + "_hist.csv", hist.str());

  atomic_write_file(cfg.out_prefix + "_ks.json", ks.dump(2) + "\n");
  log << "wrote " << cfg.out_prefix << "_{spacings,hist}.csv and _ks.json (ks_goe="
      << format_double(ks["ks_goe"].get<double>())
      << ", ks_poisson=" << format_double(ks["ks_poisson"].get<double>()) << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// order: multiplicative-order lookup
// ---------------------------------------------------------------------------

struct OrderConfig {
  std::uint64_t modulus = 0;
  std::string out;  // optional JSON path; always printed to the log stream
};

inline int run_order(const OrderConfig& cfg, std::ostream& log) {
  const OrderInfo info = multiplicative_order(cfg.modulus);
  json j;
  j["modulus"] = info.modulus;
  j["order"] = info.order;
  j["half_order_is_minus_one"] = info.half_order_is_minus_one;
  j["predicted_shoulder"] = info.half_order_is_minus_one ? info.order / 2 : info.order;
  const std::string text = j.dump(2) + "\n";
  log << text;
  if (!cfg.out.empty()) atomic_write_file(cfg.out, text);
  return 0;
}

}  // namespace qshift
