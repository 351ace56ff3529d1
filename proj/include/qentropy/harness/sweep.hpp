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

#ifndef QENTROPY_HARNESS_SWEEP_HPP
#define QENTROPY_HARNESS_SWEEP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qentropy/entropy_production.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/gad_channel.hpp"
#include "qentropy/qstate.hpp"
#include "qentropy/state_prep.hpp"
#include "qentropy/tomography.hpp"

namespace qentropy::harness {

enum class Scenario { Fig2, Fig3, Custom };
enum class AngleUnits { Degrees, Coherence };

inline const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::Fig2:
      return "fig2";
    case Scenario::Fig3:
      return "fig3";
    case Scenario::Custom:
      return "custom";
  }
  return "custom";
}

inline const char* to_string(AngleUnits u) {
  return u == AngleUnits::Degrees ? "degrees" : "coherence";
}

inline constexpr std::size_t kDefaultRPoints = 21;
inline constexpr std::uint64_t kDefaultShots = 10000;
inline constexpr std::size_t kDefaultBootstrap = 200;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// `points` evenly spaced values on [0, 1], endpoints included.
inline std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw ConfigInvalid("r grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

struct SweepConfig {
  Scenario scenario = Scenario::Custom;
  std::vector<double> p_values;
  AngleUnits angle_units = AngleUnits::Coherence;
  /// HWP1 angles in degrees, or target l1 coherences, per `angle_units`.
  std::vector<double> angle_values;
  std::vector<double> r_grid = uniform_grid(kDefaultRPoints);
  std::uint64_t shots = kDefaultShots;
  std::size_t n_bootstrap = kDefaultBootstrap;
  std::uint64_t seed = kDefaultSeed;
  std::string output_path;

  /// Three bath temperatures, maximally coherent |D><D| preparation.
  static SweepConfig fig2() {
    SweepConfig c;
    c.scenario = Scenario::Fig2;
    c.p_values = {0.9, 0.75, 0.6};
    c.angle_units = AngleUnits::Coherence;
    c.angle_values = {1.0};
    c.output_path = "fig2.csv";
    return c;
  }

  /// Fixed p = 0.9, three initial coherences.
  static SweepConfig fig3() {
    SweepConfig c;
    c.scenario = Scenario::Fig3;
    c.p_values = {0.9};
    c.angle_units = AngleUnits::Coherence;
    c.angle_values = {0.8, 0.6, 0.4};
    c.output_path = "fig3.csv";
    return c;
  }

  static SweepConfig for_scenario(Scenario s) {
    switch (s) {
      case Scenario::Fig2:
        return fig2();
      case Scenario::Fig3:
        return fig3();
      case Scenario::Custom:
        break;
    }
    SweepConfig c;
    c.output_path = "sweep.csv";
    return c;
  }

  /// HWP1 angle in radians for the i-th angle value.
  double alpha_at(std::size_t i) const {
    const double v = angle_values.at(i);
    return angle_units == AngleUnits::Degrees ? degrees_to_radians(v) : alpha_for_coherence(v);
  }

  void check() const {
    if (p_values.empty()) throw ConfigInvalid("p_values is empty");
    if (angle_values.empty()) throw ConfigInvalid("angles is empty");
    if (r_grid.empty()) throw ConfigInvalid("r grid is empty");
    for (double p : p_values) {
      if (!(p >= 0.5 && p <= 1.0)) throw ConfigInvalid("p value outside [0.5, 1]");
    }
    for (double r : r_grid) {
      if (!(r >= 0.0 && r <= 1.0)) throw ConfigInvalid("r value outside [0, 1]");
    }
    for (std::size_t i = 0; i < angle_values.size(); ++i) {
      try {
        detail::check_prep_angle(alpha_at(i));
      } catch (const ParameterOutOfRange& e) {
        throw ConfigInvalid(e.what());
      }
    }
    if (shots == 0) throw ConfigInvalid("shots must be positive");
    if (n_bootstrap < 2) throw ConfigInvalid("bootstrap must be at least 2");
    if (output_path.empty()) throw ConfigInvalid("output path is empty");
  }
};

// ---------------------------------------------------------------------------
// Flat key = value config files.
//
//   # comment
//   scenario    = custom          # fig2 | fig3 | custom (sets defaults)
//   p_values    = 0.9, 0.75
//   angle_units = degrees         # degrees | coherence
//   angles      = 0, 9.22, 13.28
//   r_points    = 21              # or: r_grid = 0, 0.5, 1
//   shots       = 10000
//   bootstrap   = 200
//   seed        = 7
//   out         = sweep.csv

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigInvalid("key '" + key + "': not a number: '" + text + "'");
  }
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigInvalid("key '" + key + "': not a non-negative integer: '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ConfigInvalid("key '" + key + "': integer out of range: '" + text + "'");
  }
}

inline std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ConfigInvalid("key '" + key + "': empty list");
  return out;
}

inline Scenario parse_scenario(const std::string& text) {
  if (text == "fig2") return Scenario::Fig2;
  if (text == "fig3") return Scenario::Fig3;
  if (text == "custom") return Scenario::Custom;
  throw ConfigInvalid("unknown scenario '" + text + "'");
}

}  // namespace detail

inline SweepConfig parse_config(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigInvalid("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigInvalid("line " + std::to_string(line_no) + ": empty key");
    if (!entries.emplace(key, value).second) throw ConfigInvalid("duplicate key '" + key + "'");
  }

  Scenario scenario = Scenario::Custom;
  if (auto it = entries.find("scenario"); it != entries.end()) {
    scenario = detail::parse_scenario(it->second);
  }
  SweepConfig cfg = SweepConfig::for_scenario(scenario);

  for (const auto& [key, value] : entries) {
    if (key == "scenario") {
      continue;
    } else if (key == "p_values") {
      cfg.p_values = detail::parse_list(key, value);
    } else if (key == "angle_units") {
      if (value == "degrees") {
        cfg.angle_units = AngleUnits::Degrees;
      } else if (value == "coherence") {
        cfg.angle_units = AngleUnits::Coherence;
      } else {
        throw ConfigInvalid("angle_units must be 'degrees' or 'coherence'");
      }
    } else if (key == "angles") {
      cfg.angle_values = detail::parse_list(key, value);
    } else if (key == "r_points") {
      if (entries.count("r_grid")) throw ConfigInvalid("give either r_points or r_grid");
      cfg.r_grid = uniform_grid(detail::parse_uint(key, value));
    } else if (key == "r_grid") {
      cfg.r_grid = detail::parse_list(key, value);
    } else if (key == "shots") {
      cfg.shots = detail::parse_uint(key, value);
    } else if (key == "bootstrap") {
      cfg.n_bootstrap = detail::parse_uint(key, value);
    } else if (key == "seed") {
      cfg.seed = detail::parse_uint(key, value);
    } else if (key == "out") {
      cfg.output_path = value;
    } else {
      throw ConfigInvalid("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

inline SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot read config file '" + path + "'");
  return parse_config(in);
}

// ---------------------------------------------------------------------------

enum class RowStatus { Ok, Indeterminate, TomographyIndeterminate };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok:
      return "ok";
    case RowStatus::Indeterminate:
      return "indeterminate";
    case RowStatus::TomographyIndeterminate:
      return "tomo_indeterminate";
  }
  return "ok";
}

/// One grid point. Analytic columns come from prepare -> apply -> budget;
/// `_tomo` columns from simulated tomography of the evolved states of the
/// coherent and dephased preparations. `_se` columns are bootstrap stderrs.
struct SweepRow {
  double p = 0.0;
  double r = 0.0;
  double alpha_deg = 0.0;
  double coherence_initial = 0.0;
  double sigma_total = 0.0;
  double sigma_pop = 0.0;
  double sigma_coh = 0.0;         // sigma_total - sigma_pop
  double sigma_coh_direct = 0.0;  // C(initial) - C(final)
  double sigma_total_tomo = 0.0;
  double sigma_total_tomo_se = 0.0;
  double sigma_pop_tomo = 0.0;
  double sigma_pop_tomo_se = 0.0;
  double sigma_coh_tomo = 0.0;
  double sigma_coh_tomo_se = 0.0;
  std::uint64_t seed_used = 0;
  RowStatus status = RowStatus::Ok;
};

namespace detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double production_or_nan(const QubitState& initial, const QubitState& final,
                                const QubitState& eq) {
  try {
    return total_production(initial, final, eq).value();
  } catch (const IndeterminateError&) {
    return kNaN;
  }
}

inline double difference_or_nan(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return kNaN;
  if (std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0)) return kNaN;
  return a - b;
}

}  // namespace detail

/// Evaluates both experiments at one (p, alpha, r) point.
inline SweepRow compute_row(double p, double alpha, double r, std::uint64_t shots,
                            std::size_t n_bootstrap, std::uint64_t row_seed) {
  const GadChannel ch(p, r);
  const QubitState eq = equilibrium_state(ch);
  const QubitState coherent = prepare({alpha, false});
  const QubitState dephased = prepare({alpha, true});

  SweepRow row;
  row.p = p;
  row.r = r;
  row.alpha_deg = radians_to_degrees(alpha);
  row.coherence_initial = l1_coherence(coherent);
  row.seed_used = row_seed;

  try {
    const EntropyBudget b = budget(coherent, ch);
    row.sigma_total = b.total.value();
    row.sigma_pop = b.population.value();
    row.sigma_coh_direct = b.coherence;
    row.sigma_coh = detail::difference_or_nan(row.sigma_total, row.sigma_pop);
  } catch (const IndeterminateError&) {
    row.sigma_total = row.sigma_pop = row.sigma_coh = detail::kNaN;
    row.sigma_coh_direct = coherence_production(coherent, apply(ch, coherent));
  }
  if (std::isnan(row.sigma_coh)) row.status = RowStatus::Indeterminate;

  // Experiment 1 measures the evolved coherent preparation, experiment 2 the
  // evolved dephased one. Replicate b of each pairs up for the difference.
  const Reconstruction rec1 =
      reconstruct_with_errors(apply(ch, coherent), shots, derive_seed(row_seed, 1), n_bootstrap);
  const Reconstruction rec2 =
      reconstruct_with_errors(apply(ch, dephased), shots, derive_seed(row_seed, 2), n_bootstrap);

  row.sigma_total_tomo = detail::production_or_nan(coherent, rec1.state, eq);
  row.sigma_pop_tomo = detail::production_or_nan(dephased, rec2.state, eq);
  row.sigma_coh_tomo = detail::difference_or_nan(row.sigma_total_tomo, row.sigma_pop_tomo);

  std::vector<double> total_b(n_bootstrap), pop_b(n_bootstrap), coh_b(n_bootstrap);
  bool finite = true;
  for (std::size_t i = 0; i < n_bootstrap; ++i) {
    total_b[i] = detail::production_or_nan(coherent, rec1.replicates[i], eq);
    pop_b[i] = detail::production_or_nan(dephased, rec2.replicates[i], eq);
    coh_b[i] = detail::difference_or_nan(total_b[i], pop_b[i]);
    finite = finite && std::isfinite(total_b[i]) && std::isfinite(pop_b[i]);
  }
  if (finite) {
    row.sigma_total_tomo_se = sample_stddev(total_b);
    row.sigma_pop_tomo_se = sample_stddev(pop_b);
    row.sigma_coh_tomo_se = sample_stddev(coh_b);
  } else {
    row.sigma_total_tomo_se = row.sigma_pop_tomo_se = row.sigma_coh_tomo_se = detail::kNaN;
  }

  if (row.status == RowStatus::Ok &&
      (std::isnan(row.sigma_total_tomo) || std::isnan(row.sigma_pop_tomo))) {
    row.status = RowStatus::TomographyIndeterminate;
  }
  return row;
}

/// Rows ordered by (p, angle, r) in config order. Row k uses seed
/// derive_seed(config.seed, k).
inline std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.check();
  std::vector<SweepRow> rows;
  rows.reserve(config.p_values.size() * config.angle_values.size() * config.r_grid.size());
  std::uint64_t index = 0;
  for (double p : config.p_values) {
    for (std::size_t a = 0; a < config.angle_values.size(); ++a) {
      const double alpha = config.alpha_at(a);
      for (double r : config.r_grid) {
        rows.push_back(compute_row(p, alpha, r, config.shots, config.n_bootstrap,
                                   derive_seed(config.seed, index++)));
      }
    }
  }
  return rows;
}

}  // namespace qentropy::harness

#endif  // QENTROPY_HARNESS_SWEEP_HPP
