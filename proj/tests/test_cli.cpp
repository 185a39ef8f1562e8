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

#include <doctest.h>
#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "qshift/experiments.hpp"

using namespace qshift;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qshift_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("run_order emits the order table") {
  std::ostringstream log;
  OrderConfig cfg;
  cfg.modulus = 253;
  CHECK(run_order(cfg, log) == 0);
  const json j = json::parse(log.str());
  CHECK(j["modulus"] == 253);
  CHECK(j["order"] == 110);
  CHECK(j["half_order_is_minus_one"] == false);
  CHECK(j["predicted_shoulder"] == 110);

  std::ostringstream log2;
  cfg.modulus = 255;
  run_order(cfg, log2);
  CHECK(json::parse(log2.str())["order"] == 8);

  std::ostringstream log3;
  cfg.modulus = 9;  // 2^6 = 64 = 1 mod 9
  run_order(cfg, log3);
  const json j9 = json::parse(log3.str());
  CHECK(j9["order"] == 6);
  CHECK(j9["half_order_is_minus_one"] == true);

  cfg.modulus = 10;
  std::ostringstream log4;
  CHECK_THROWS_AS(run_order(cfg, log4), std::invalid_argument);
}

TEST_CASE("run_fidelity writes deterministic CSV and JSON sidecars") {
  TempDir dir;
  FidelityConfig cfg;
  cfg.ns = {8, 16};
  cfg.theta = 0.1;
  cfg.pauli = Pauli::Y;
  cfg.trace_length = 30;
  cfg.out_prefix = dir.file("trace");
  std::ostringstream log;
  CHECK(run_fidelity(cfg, log) == 0);

  const std::string csv = read_file(dir.file("trace_N8.csv"));
  CHECK(csv.rfind("# qshift fidelity N=8 pauli=y", 0) == 0);
  CHECK(csv.find("t,f,f_model,flags\n") != std::string::npos);
  CHECK(csv.find("\n0,1,1,0\n") != std::string::npos);  // f(0) = 1 exactly

  const json sidecar = json::parse(read_file(dir.file("trace_N8.json")));
  CHECK(sidecar["N"] == 8);
  CHECK(sidecar["k0"] == 3);  // ord_2(7)
  CHECK(sidecar["predicted_shoulder"] == 3);
  CHECK(sidecar.contains("detected_shoulders"));

  // byte-identical on re-run
  const std::string json_before = read_file(dir.file("trace_N16.json"));
  std::ostringstream log2;
  run_fidelity(cfg, log2);
  CHECK(read_file(dir.file("trace_N8.csv")) == csv);
  CHECK(read_file(dir.file("trace_N16.json")) == json_before);

  cfg.trace_length = 0;
  std::ostringstream log3;
  CHECK_THROWS_AS(run_fidelity(cfg, log3), std::invalid_argument);
  cfg.trace_length = 5;
  cfg.ns = {7};
  CHECK_THROWS_AS(run_fidelity(cfg, log3), std::invalid_argument);
}

TEST_CASE("run_fidelity: sigma_x column is identically one") {
  TempDir dir;
  FidelityConfig cfg;
  cfg.ns = {32};
  cfg.theta = 0.2;
  cfg.pauli = Pauli::X;
  cfg.alpha = 0.0;
  cfg.trace_length = 40;
  cfg.out_prefix = dir.file("flat");
  std::ostringstream log;
  run_fidelity(cfg, log);
  std::istringstream csv(read_file(dir.file("flat_N32.csv")));
  std::string line;
  std::getline(csv, line);  // comment
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
    const double f = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(std::abs(f - 1.0) <= 1e-10);
  }
}

TEST_CASE("run_spectrum: synthetic calibration mode") {
  TempDir dir;
  SpectrumConfig cfg;
  cfg.synthetic = SyntheticKind::goe;
  cfg.draws = 10000;
  cfg.seed = 12345;
  cfg.out_prefix = dir.file("syn");
  std::ostringstream log;
  CHECK(run_spectrum(cfg, log) == 0);

  const json ks = json::parse(read_file(dir.file("syn_ks.json")));
  CHECK(ks["synthetic"] == "goe");
  CHECK(ks["ks_goe"].get<double>() < 0.02);
  CHECK(ks["ks_goe"].get<double>() < ks["ks_poisson"].get<double>());

  const std::string hist_before = read_file(dir.file("syn_hist.csv"));
  std::ostringstream log2;
  run_spectrum(cfg, log2);
  CHECK(read_file(dir.file("syn_hist.csv")) == hist_before);

  cfg.synthetic = SyntheticKind::poisson;
  std::ostringstream log3;
  run_spectrum(cfg, log3);
  const json ksp = json::parse(read_file(dir.file("syn_ks.json")));
  CHECK(ksp["ks_poisson"].get<double>() < 0.02);
}

TEST_CASE("run_spectrum: operator mode bookkeeping and refusals") {
  TempDir dir;
  SpectrumConfig cfg;
  cfg.n = 16;
  cfg.theta = 0.2;
  cfg.alpha = 0.5;
  cfg.pauli = Pauli::X;
  cfg.sector = Sector::odd;
  cfg.bins = 8;
  cfg.out_prefix = dir.file("spec");
  std::ostringstream log;
  CHECK(run_spectrum(cfg, log) == 0);
  const json ks = json::parse(read_file(dir.file("spec_ks.json")));
  CHECK(ks["sector"] == "odd");
  CHECK(ks["dim"] == 8);  // spacing count = subspace dimension

  // '#' config comment + header on every CSV
  const std::string spacings = read_file(dir.file("spec_spacings.csv"));
  CHECK(spacings.rfind("# qshift spectrum", 0) == 0);
  CHECK(spacings.find("index,spacing\n") != std::string::npos);

  cfg.cap = 4;  // sector dimension 8 exceeds the cap
  std::ostringstream log2;
  CHECK_THROWS_AS(run_spectrum(cfg, log2), std::invalid_argument);
  cfg.cap = 2048;
  cfg.bins = 2;
  CHECK_THROWS_AS(run_spectrum(cfg, log2), std::invalid_argument);
}

TEST_CASE("flag parsing helpers") {
  CHECK(parse_pauli("x") == Pauli::X);
  CHECK(parse_pauli("Y") == Pauli::Y);
  CHECK(parse_sector("full") == Sector::full);
  CHECK_THROWS_AS(parse_pauli("q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sector("both"), std::invalid_argument);
}

TEST_CASE("run_spectrum: full-spectrum sector") {
  TempDir dir;
  SpectrumConfig cfg;
  cfg.n = 16;
  cfg.theta = 0.2;
  cfg.alpha = 0.5;
  cfg.pauli = Pauli::X;
  cfg.sector = Sector::full;
  cfg.bins = 8;
  cfg.out_prefix = dir.file("full");
  std::ostringstream log;
  CHECK(run_spectrum(cfg, log) == 0);
  const json ks = json::parse(read_file(dir.file("full_ks.json")));
  CHECK(ks["sector"] == "full");
  CHECK(ks["dim"] == 16);
}

TEST_CASE("run_spectrum: theta = 0 spectrum is dominated by degenerate spacings") {
  TempDir dir;
  SpectrumConfig cfg;
  cfg.n = 64;
  cfg.theta = 0.0;
  cfg.alpha = 0.5;
  cfg.pauli = Pauli::X;
  cfg.sector = Sector::even;
  cfg.bins = 16;
  cfg.out_prefix = dir.file("deg");
  std::ostringstream log;
  CHECK(run_spectrum(cfg, log) == 0);
  const json ks = json::parse(read_file(dir.file("deg_ks.json")));
  CHECK(ks["fraction_below_0.1"].get<double>() >= 0.3);
  CHECK(ks["ks_goe"].get<double>() > 0.2);
}

TEST_CASE("run_verify passes on the honest build and fails on an injected fault") {
  TempDir dir;
  VerifyConfig cfg;
  cfg.n_max = 64;
  cfg.out = dir.file("report.json");
  std::ostringstream log;
  CHECK(run_verify(cfg, log) == 0);
  const json report = json::parse(read_file(cfg.out));
  CHECK(report["pass"] == true);
  CHECK(report["checks"]["decomposition"]["max_deviation"].get<double>() <= 1e-10);
  CHECK(report["checks"]["factored_form"]["pass"] == true);

  // alpha-independence: an off-grid boundary phase passes identically
  VerifyConfig odd_alpha;
  odd_alpha.n_max = 32;
  odd_alpha.alphas = {0.37};
  std::ostringstream log2;
  CHECK(run_verify(odd_alpha, log2) == 0);

  VerifyConfig faulty;
  faulty.n_max = 16;
  faulty.inject_fault = true;
  std::ostringstream log3;
  CHECK(run_verify(faulty, log3) == 1);
}
