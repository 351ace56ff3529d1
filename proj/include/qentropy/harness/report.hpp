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

#ifndef QENTROPY_HARNESS_REPORT_HPP
#define QENTROPY_HARNESS_REPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qentropy/errors.hpp"
#include "qentropy/harness/sweep.hpp"
#include "qentropy/tomography.hpp"

namespace qentropy::harness {

inline constexpr const char* kCsvHeader =
    "p,r,alpha_deg,coherence_initial,sigma_total,sigma_pop,sigma_coh,sigma_coh_direct,"
    "sigma_total_tomo,sigma_total_tomo_se,sigma_pop_tomo,sigma_pop_tomo_se,"
    "sigma_coh_tomo,sigma_coh_tomo_se,seed_used,status";

/// 12 significant digits; non-finite values as inf, -inf, nan.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_row(const SweepRow& row) {
  std::string out;
  for (double v : {row.p, row.r, row.alpha_deg, row.coherence_initial, row.sigma_total,
                   row.sigma_pop, row.sigma_coh, row.sigma_coh_direct, row.sigma_total_tomo,
                   row.sigma_total_tomo_se, row.sigma_pop_tomo, row.sigma_pop_tomo_se,
                   row.sigma_coh_tomo, row.sigma_coh_tomo_se}) {
    out += format_real(v);
    out += ',';
  }
  out += std::to_string(row.seed_used);
  out += ',';
  out += to_string(row.status);
  return out;
}

inline void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw Error("no sweep rows to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
  out.flush();
  if (!out) throw IoFailure("write to '" + path + "' failed");
}

/// Provenance of a sweep: RNG and bootstrap procedure, one key=value per line.
inline std::string format_metadata(const SweepConfig& config) {
  std::ostringstream os;
  os << "scenario=" << to_string(config.scenario) << '\n'
     << "rng=" << kRngAlgorithm << '\n'
     << "seed=" << config.seed << '\n'
     << "row_seed=derive_seed(seed, row_index)\n"
     << "shots_per_basis=" << config.shots << '\n'
     << "bases=H,V,R,D (independent binomial counts)\n"
     << "reconstruction=linear inversion + radial Bloch projection\n"
     << "n_bootstrap=" << config.n_bootstrap << '\n'
     << "bootstrap=parametric; binomial resampling at observed frequencies; "
        "stderr = sample standard deviation over replicates\n"
     << "tomography_path=evolved states reconstructed; initial state ideal\n"
     << "error_bars=simulation-based, not laboratory estimates\n";
  return os.str();
}

inline void write_metadata(const SweepConfig& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out << format_metadata(config);
  if (!out) throw IoFailure("write to '" + path + "' failed");
}

/// Aggregate diagnostics over a sweep.
struct SweepSummary {
  std::size_t rows = 0;
  std::size_t indeterminate_rows = 0;
  double max_additivity_violation = 0.0;  // |total - pop - coh_direct|
  double max_route_disagreement = 0.0;    // |coh - coh_direct|
  double max_negativity = 0.0;            // largest negative analytic value, as magnitude
  double max_tomo_deviation = 0.0;        // |tomo - analytic| over the three columns
  double max_tomo_deviation_in_se = 0.0;  // that deviation / its stderr
  std::string max_tomo_column;
  double within_3se_fraction = 0.0;       // sigma_total rows with |dev| <= 3 se
  double coh_spread_across_p = 0.0;       // max over (angle, r) of spread across p
  double pop_spread_across_angle = 0.0;   // max over (p, r) of spread across angles
};

inline SweepSummary summarize(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw Error("no sweep rows to summarize");
  SweepSummary s;
  s.rows = rows.size();

  std::map<std::pair<double, double>, std::pair<double, double>> coh_by_angle_r;
  std::map<std::pair<double, double>, std::pair<double, double>> pop_by_p_r;
  auto widen = [](auto& bucket, auto key, double v) {
    auto [it, fresh] = bucket.try_emplace(key, v, v);
    if (!fresh) {
      it->second.first = std::min(it->second.first, v);
      it->second.second = std::max(it->second.second, v);
    }
  };

  std::size_t comparable = 0, within = 0;
  for (const auto& row : rows) {
    if (row.status != RowStatus::Ok) ++s.indeterminate_rows;

    if (std::isfinite(row.sigma_total) && std::isfinite(row.sigma_pop)) {
      s.max_additivity_violation =
          std::max(s.max_additivity_violation,
                   std::abs(row.sigma_total - row.sigma_pop - row.sigma_coh_direct));
      s.max_route_disagreement =
          std::max(s.max_route_disagreement, std::abs(row.sigma_coh - row.sigma_coh_direct));
      for (double v : {row.sigma_total, row.sigma_pop, row.sigma_coh, row.sigma_coh_direct}) {
        s.max_negativity = std::max(s.max_negativity, -v);
      }
      widen(coh_by_angle_r, std::make_pair(row.alpha_deg, row.r), row.sigma_coh);
      widen(pop_by_p_r, std::make_pair(row.p, row.r), row.sigma_pop);
    }

    const std::array<std::tuple<const char*, double, double, double>, 3> cols = {{
        {"sigma_total", row.sigma_total, row.sigma_total_tomo, row.sigma_total_tomo_se},
        {"sigma_pop", row.sigma_pop, row.sigma_pop_tomo, row.sigma_pop_tomo_se},
        {"sigma_coh", row.sigma_coh, row.sigma_coh_tomo, row.sigma_coh_tomo_se},
    }};
    for (const auto& [name, analytic, tomo, se] : cols) {
      if (!std::isfinite(analytic) || !std::isfinite(tomo)) continue;
      const double dev = std::abs(tomo - analytic);
      if (dev > s.max_tomo_deviation) {
        s.max_tomo_deviation = dev;
        s.max_tomo_deviation_in_se = se > 0.0 ? dev / se : std::numeric_limits<double>::infinity();
        s.max_tomo_column = name;
      }
    }
    if (std::isfinite(row.sigma_total) && std::isfinite(row.sigma_total_tomo) &&
        std::isfinite(row.sigma_total_tomo_se)) {
      ++comparable;
      if (std::abs(row.sigma_total_tomo - row.sigma_total) <= 3.0 * row.sigma_total_tomo_se) {
        ++within;
      }
    }
  }
  s.within_3se_fraction =
      comparable ? static_cast<double>(within) / static_cast<double>(comparable) : 0.0;
  for (const auto& [key, range] : coh_by_angle_r) {
    s.coh_spread_across_p = std::max(s.coh_spread_across_p, range.second - range.first);
  }
  for (const auto& [key, range] : pop_by_p_r) {
    s.pop_spread_across_angle = std::max(s.pop_spread_across_angle, range.second - range.first);
  }
  return s;
}

inline std::string emit_summary(const std::vector<SweepRow>& rows) {
  const SweepSummary s = summarize(rows);
  std::ostringstream os;
  os << "rows                              " << s.rows << '\n'
     << "indeterminate rows                " << s.indeterminate_rows << '\n'
     << "max additivity violation          " << format_real(s.max_additivity_violation) << '\n'
     << "max sigma_coh route disagreement  " << format_real(s.max_route_disagreement) << '\n'
     << "max negativity                    " << format_real(s.max_negativity) << '\n'
     << "max |tomography - analytic|       " << format_real(s.max_tomo_deviation);
  if (!s.max_tomo_column.empty()) {
    os << " (" << s.max_tomo_column << ", " << format_real(s.max_tomo_deviation_in_se)
       << " stderr)";
  }
  os << '\n'
     << "sigma_total within 3 stderr       " << format_real(s.within_3se_fraction) << '\n'
     << "sigma_coh spread across p         " << format_real(s.coh_spread_across_p) << '\n'
     << "sigma_pop spread across angles    " << format_real(s.pop_spread_across_angle) << '\n';
  return os.str();
}

}  // namespace qentropy::harness

#endif  // QENTROPY_HARNESS_REPORT_HPP
