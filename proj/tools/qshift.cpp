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

/// Command-line front end. Subcommands:
///   verify    exact-identity suite over an even-N grid (exit 1 on failure)
///   fidelity  fidelity-decay traces, CSV + JSON sidecar per N
///   spectrum  nearest-neighbor spacing statistics, CSV + KS JSON
///   order     multiplicative order of 2 and the predicted shoulder, JSON
/// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <iostream>

#include <CLI11.hpp>

#include "qshift/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"modular-multiplication operator toolkit: baker decompositions, "
               "fidelity decay, spectral statistics"};
  app.require_subcommand(1);

  qshift::VerifyConfig vcfg;
  CLI::App* verify = app.add_subcommand("verify", "run the exact-identity suite");
  verify->add_option("--alpha", vcfg.alphas, "boundary phases to test (default 0 0.25 0.5)");
  verify->add_option("--n-min", vcfg.n_min, "smallest even N of the grid");
  verify->add_option("--n-max", vcfg.n_max, "largest even N of the grid");
  verify->add_option("--theta", vcfg.theta, "perturbation angle for the parity check");
  verify->add_flag("--self-test-fault", vcfg.inject_fault,
                   "inject a one-entry fault to prove failures are caught");
  verify->add_option("--out", vcfg.out, "write the JSON report here");

  qshift::FidelityConfig fcfg;
  std::string fidelity_pauli = "y";
  CLI::App* fidelity = app.add_subcommand("fidelity", "fidelity-decay traces");
  fidelity->add_option("--N", fcfg.ns, "Hilbert dimensions (comma separated)")
      ->required()
      ->delimiter(',');
  fidelity->add_option("--theta", fcfg.theta, "perturbation angle");
  fidelity->add_option("--alpha", fcfg.alpha, "boundary phase");
  fidelity->add_option("--pauli", fidelity_pauli, "perturbation axis: x, y or z");
  fidelity->add_option("--T", fcfg.trace_length, "trace length");
  fidelity->add_option("--window", fcfg.shoulder.window, "shoulder detector half-window");
  fidelity->add_option("--factor", fcfg.shoulder.factor, "shoulder detector slope factor");
  fidelity->add_option("--out", fcfg.out_prefix, "output path prefix");

  qshift::SpectrumConfig scfg;
  std::string spectrum_pauli = "x";
  std::string spectrum_sector = "even";
  std::string synthetic;
  CLI::App* spectrum = app.add_subcommand("spectrum", "spacing statistics");
  spectrum->add_option("--N", scfg.n, "Hilbert dimension");
  spectrum->add_option("--theta", scfg.theta, "perturbation angle");
  spectrum->add_option("--alpha", scfg.alpha, "boundary phase");
  spectrum->add_option("--pauli", spectrum_pauli, "perturbation axis: x, y or z");
  spectrum->add_option("--sector", spectrum_sector, "parity sector: even, odd or full");
  spectrum->add_option("--bins", scfg.bins, "histogram bins");
  spectrum->add_option("--smax", scfg.s_max, "histogram upper edge");
  spectrum->add_option("--cap", scfg.cap, "eigensolver dimension cap");
  spectrum->add_option("--seed", scfg.seed, "seed for synthetic sampling");
  spectrum->add_option("--synthetic", synthetic,
                       "sample the reference distribution instead: goe or poisson");
  spectrum->add_option("--draws", scfg.draws, "synthetic sample size");
  spectrum->add_option("--out", scfg.out_prefix, "output path prefix");

  qshift::OrderConfig ocfg;
  CLI::App* order = app.add_subcommand("order", "multiplicative order of 2 mod M");
  order->add_option("--modulus", ocfg.modulus, "odd modulus M = N-1")->required();
  order->add_option("--out", ocfg.out, "write the JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return qshift::run_verify(vcfg, std::cout);
    if (*fidelity) {
      fcfg.pauli = qshift::parse_pauli(fidelity_pauli);
      return qshift::run_fidelity(fcfg, std::cout);
    }
    if (*spectrum) {
      scfg.pauli = qshift::parse_pauli(spectrum_pauli);
      scfg.sector = qshift::parse_sector(spectrum_sector);
      if (!synthetic.empty()) {
        if (synthetic == "goe")
          scfg.synthetic = qshift::SyntheticKind::goe;
        else if (synthetic == "poisson")
          scfg.synthetic = qshift::SyntheticKind::poisson;
        else
          throw std::invalid_argument("--synthetic must be goe or poisson");
      }
      return qshift::run_spectrum(scfg, std::cout);
    }
    if (*order) return qshift::run_order(ocfg, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
