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

// memur: memory-assisted entropic uncertainty under non-Markovian noise.
//
//   memur run --config scenario.cfg --out result.csv
//   memur presets --out-dir figures/
//   memur check [--inject ub=1e-6]

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "memur/invariants.hpp"
#include "memur/scenario.hpp"

namespace fs = std::filesystem;

namespace {

void print_summary(const std::string& label, const memur::ScenarioResult& r) {
  std::cout << label << ": " << memur::to_string(r.config.model) << " param=" << r.config.noise_param
            << " (a,b,c)=(" << r.config.a << "," << r.config.b << "," << r.config.c << ")"
            << " points=" << r.rows.size() << " lfs=" << r.report.total_measure
            << " revivals=" << r.report.revival_intervals.size()
            << (r.report.is_markovian ? " markovian" : " non-markovian") << "\n";
}

fs::path plot_path_for(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".svg");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memory-assisted entropic uncertainty with a noisy quantum memory"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Simulate one scenario and write CSV + SVG");
  std::string config_path;
  std::optional<std::string> model, out, plot;
  std::optional<double> a, b, c, noise_param, t_max, threshold;
  std::optional<std::size_t> n_points;
  run->add_option("--config", config_path, "key = value scenario file")->check(CLI::ExistingFile);
  run->add_option("--model", model, "dephasing | relaxation");
  run->add_option("--a", a, "weight of |00>");
  run->add_option("--b", b, "weight of |10>");
  run->add_option("--c", c, "weight of |11>");
  run->add_option("--noise-param", noise_param, "tau (dephasing) or lambda/gamma0 (relaxation)");
  run->add_option("--t-max", t_max, "end of the scaled time window");
  run->add_option("--n-points", n_points, "number of grid points");
  run->add_option("--threshold", threshold, "per-increment revival threshold (bits)");
  run->add_option("--out", out, "CSV output path (overrides output_path)");
  run->add_option("--plot", plot, "SVG output path (default: CSV path with .svg)");

  // presets
  auto* presets = app.add_subcommand("presets", "Write all twelve figure-panel scenarios");
  std::string out_dir;
  std::size_t preset_points = memur::kDefaultPoints;
  presets->add_option("--out-dir", out_dir, "output directory")->required();
  presets->add_option("--n-points", preset_points, "grid points per scenario");

  // check
  auto* check = app.add_subcommand("check", "Run the invariant suite; nonzero exit on violation");
  std::vector<std::string> inject;
  memur::SuiteOptions suite;
  check->add_option("--inject", inject, "add an offset to a computed quantity, e.g. ub=1e-6");
  check->add_option("--n-points", suite.n_points, "grid points per preset");
  check->add_option("--random-draws", suite.random_draws, "number of random scenarios");
  check->add_option("--seed", suite.seed, "seed for the random scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      std::map<std::string, std::string> values;
      if (!config_path.empty()) values = memur::read_config_file(config_path);
      auto set = [&](const char* key, const auto& opt) {
        if (!opt) return;
        if constexpr (std::is_same_v<std::decay_t<decltype(*opt)>, std::string>) {
          values[key] = *opt;
        } else {
          char buf[40];
          if constexpr (std::is_floating_point_v<std::decay_t<decltype(*opt)>>) {
            std::snprintf(buf, sizeof buf, "%.17g", *opt);
          } else {
            std::snprintf(buf, sizeof buf, "%zu", static_cast<std::size_t>(*opt));
          }
          values[key] = buf;
        }
      };
      set("model", model);
      set("a", a);
      set("b", b);
      set("c", c);
      set("noise_param", noise_param);
      set("t_max", t_max);
      set("n_points", n_points);
      set("threshold", threshold);
      set("output_path", out);

      const memur::ScenarioConfig cfg = memur::make_config(values);
      if (cfg.output_path.empty()) {
        std::cerr << "error: no output path (set output_path in the config or pass --out)\n";
        return 2;
      }
      const memur::ScenarioResult result = memur::run_scenario(cfg);
      memur::emit_csv(result, cfg.output_path);
      const fs::path svg = plot ? fs::path(*plot) : plot_path_for(cfg.output_path);
      memur::emit_plot(result, svg);
      print_summary(cfg.output_path, result);
      return 0;
    }

    if (*presets) {
      fs::create_directories(out_dir);
      for (const auto& preset : memur::figure_presets(preset_points)) {
        const memur::ScenarioResult result = memur::run_scenario(preset.config);
        const fs::path csv = fs::path(out_dir) / (preset.name + ".csv");
        memur::emit_csv(result, csv);
        memur::emit_plot(result, plot_path_for(csv));
        print_summary(preset.name, result);
      }
      return 0;
    }

    if (*check) {
      suite.fault = memur::parse_fault(inject);
      bool all = true;
      for (const auto& r : memur::run_invariant_suite(suite)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.description << ": "
                  << r.detail << "\n";
        all = all && r.passed;
      }
      std::cout << (all ? "all invariants hold\n" : "invariant violation detected\n");
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
