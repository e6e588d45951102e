// Copyright 2026 The memur Authors
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

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "memur/channels.hpp"
#include "memur/linalg.hpp"
#include "memur/nonmarkov.hpp"
#include "memur/uncertainty.hpp"

namespace memur {

enum class NoiseModel { kDephasing, kRelaxation };

std::string_view to_string(NoiseModel model);
/// Accepts "dephasing" or "relaxation"; throws std::invalid_argument otherwise.
NoiseModel parse_noise_model(std::string_view text);

inline constexpr std::size_t kDefaultPoints = 2000;

/// Default scaled-time window: ν = t/2τ for dephasing, γ0·t for relaxation.
double default_t_max(NoiseModel model);

/// Scaled time axis label used in plots.
std::string_view time_axis_label(NoiseModel model);

struct ScenarioConfig {
  NoiseModel model = NoiseModel::kDephasing;
  double a = 0.5;
  double b = 0.0;
  double c = 0.5;
  double noise_param = 5.0;  ///< τ or λ/γ0
  double t_max = 10.0;
  std::size_t n_points = kDefaultPoints;
  double threshold = kDefaultRevivalThreshold;
  std::string output_path;

  /// Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

/// Flat `key = value` text, `#` starts a comment. Throws std::invalid_argument
/// on malformed lines or unknown keys; later duplicates win.
std::map<std::string, std::string> parse_config_text(std::string_view text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Builds a validated config from key/value pairs. A missing t_max falls back
/// to default_t_max() of the chosen model.
ScenarioConfig make_config(const std::map<std::string, std::string>& values);

/// √a|00⟩ + √b|10⟩ + √c|11⟩. A sum within 1e-9 of 1 is renormalized; larger
/// deviations and negative weights throw std::invalid_argument.
PureState build_initial_state(double a, double b, double c);

KrausChannel channel_at(NoiseModel model, double noise_param, double scaled_t);

/// n uniformly spaced points on [0, t_max], endpoints included.
std::vector<double> time_grid(double t_max, std::size_t n_points);

struct ScenarioRow {
  UncertaintyRecord record;
  double s_a = 0.0;  ///< S(ρ_A), constant in time
  double i_ae = 0.0;
  double i_be = 0.0;
  double ternary_mi = 0.0;
  double lfs_running = 0.0;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<ScenarioRow> rows;
  RevivalReport report;

  std::vector<double> times() const;
  std::vector<double> column(double UncertaintyRecord::*field) const;
  std::vector<double> column(double ScenarioRow::*field) const;
};

/// Evolves the initial state with the closed-form channel at every grid time,
/// evaluates the uncertainty record and the dilation, and runs the revival
/// analysis on I_AB. Errors carry the offending time in their message.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "time,u,ub,s_q_given_b,s_r_given_b,s_a_given_b,i_ab,i_ae,lfs_running";

/// Header line, then one row per grid point, 12 significant digits.
std::string format_csv(const ScenarioResult& result);
void emit_csv(const ScenarioResult& result, const std::filesystem::path& path);

/// Standalone SVG with U (solid), UB (dashed) and I_AB (dotted) against the
/// model's scaled time.
std::string render_svg(const ScenarioResult& result);
void emit_plot(const ScenarioResult& result, const std::filesystem::path& path);

struct Preset {
  std::string name;  ///< figure panel, e.g. "fig2c"
  ScenarioConfig config;
};

/// The twelve figure panels: two initial states times three memory
/// parameters for each noise model.
std::vector<Preset> figure_presets(std::size_t n_points = kDefaultPoints);

}  // namespace memur
