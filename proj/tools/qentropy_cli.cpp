// Copyright 2026 The qentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qentropy: entropy-production sweeps and property checks for a qubit under
// the generalized amplitude damping channel.
//
//   qentropy fig2  [--shots N] [--bootstrap B] [--seed S] [--out PATH] [--r-points K]
//   qentropy fig3  [...]
//   qentropy sweep --config PATH [...]
//   qentropy check
//
// Exit codes: 0 success, 1 usage/config error, 2 property failure, 3 I/O failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/harness/property_suite.hpp"
#include "qentropy/harness/report.hpp"
#include "qentropy/harness/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailure = 2;
constexpr int kExitIo = 3;

struct Overrides {
  std::optional<std::uint64_t> shots;
  std::optional<std::size_t> bootstrap;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> r_points;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shots", shots, "Shots per projection basis");
    cmd->add_option("--bootstrap", bootstrap, "Bootstrap resamples per reconstruction");
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--out", out, "Output CSV path");
    cmd->add_option("--r-points", r_points, "Uniform r-grid points on [0, 1]");
  }

  void apply(qentropy::harness::SweepConfig& cfg) const {
    if (shots) cfg.shots = *shots;
    if (bootstrap) cfg.n_bootstrap = *bootstrap;
    if (seed) cfg.seed = *seed;
    if (out) cfg.output_path = *out;
    if (r_points) cfg.r_grid = qentropy::harness::uniform_grid(*r_points);
  }
};

int run_and_write(const qentropy::harness::SweepConfig& cfg) {
  namespace h = qentropy::harness;
  const auto rows = h::run_sweep(cfg);
  h::emit_csv(rows, cfg.output_path);
  h::write_metadata(cfg, cfg.output_path + ".meta");
  std::cout << "wrote " << rows.size() << " rows to " << cfg.output_path << '\n'
            << h::emit_summary(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  namespace h = qentropy::harness;

  CLI::App app{"Entropy production of a qubit under generalized amplitude damping"};
  app.require_subcommand(1);

  Overrides overrides;
  auto* fig2 = app.add_subcommand("fig2", "Sweep r for p in {0.9, 0.75, 0.6}, initial |D><D|");
  auto* fig3 = app.add_subcommand("fig3", "Sweep r at p = 0.9 for initial coherence 0.8, 0.6, 0.4");
  auto* sweep = app.add_subcommand("sweep", "Sweep described by a key = value config file");
  auto* check = app.add_subcommand("check", "Run the property suite");
  std::string config_path;
  sweep->add_option("--config", config_path, "Config file")->required();
  for (auto* cmd : {fig2, fig3, sweep}) overrides.attach(cmd);
  std::uint64_t check_seed = h::kPropertySeed;
  check->add_option("--seed", check_seed, "Master seed for randomized properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      const auto report = h::run_property_suite(check_seed);
      std::cout << report.format();
      return report.all_passed() ? 0 : kExitPropertyFailure;
    }
    h::SweepConfig cfg;
    if (*fig2) {
      cfg = h::SweepConfig::fig2();
    } else if (*fig3) {
      cfg = h::SweepConfig::fig3();
    } else {
      cfg = h::load_config(config_path);
    }
    overrides.apply(cfg);
    return run_and_write(cfg);
  } catch (const qentropy::IoFailure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qentropy::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
