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

#include "memur/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "memur/dilation.hpp"

namespace memur {

std::string_view to_string(NoiseModel model) {
  switch (model) {
    case NoiseModel::kDephasing:
      return "dephasing";
    case NoiseModel::kRelaxation:
      return "relaxation";
  }
  return "unknown";
}

NoiseModel parse_noise_model(std::string_view text) {
  if (text == "dephasing") return NoiseModel::kDephasing;
  if (text == "relaxation") return NoiseModel::kRelaxation;
  throw std::invalid_argument("unknown noise model '" + std::string(text) + "'");
}

double default_t_max(NoiseModel model) {
  return model == NoiseModel::kDephasing ? 5.0 : 60.0;
}

std::string_view time_axis_label(NoiseModel model) {
  return model == NoiseModel::kDephasing ? "t/2τ" : "γ₀t";
}

void ScenarioConfig::validate() const {
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
    throw std::invalid_argument("config: a, b, c must be non-negative");
  }
  if (std::abs(a + b + c - 1.0) > 1e-9) {
    throw std::invalid_argument("config: a + b + c must equal 1");
  }
  if (!(noise_param > 0.0) || !std::isfinite(noise_param)) {
    throw std::invalid_argument("config: noise_param must be positive");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("config: t_max must be positive");
  }
  if (n_points < 2) throw std::invalid_argument("config: n_points must be at least 2");
  if (!(threshold >= 0.0)) throw std::invalid_argument("config: threshold must be >= 0");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("config: '" + key + "' is not a number: '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("config: '" + key + "' is not a count: '" + text + "'");
  }
  return value;
}

constexpr std::string_view kKnownKeys[] = {"model",  "a",        "b",         "c",          "noise_param",
                                           "t_max", "n_points", "threshold", "output_path"};

bool known_key(std::string_view key) {
  return std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) != std::end(kKnownKeys);
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known_key(key)) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    }
    out[std::string(key)] = std::string(value);
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

ScenarioConfig make_config(const std::map<std::string, std::string>& values) {
  ScenarioConfig cfg;
  auto get = [&](const char* key) -> const std::string* {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };
  for (const auto& [key, _] : values) {
    if (!known_key(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
  }

  if (auto* v = get("model")) cfg.model = parse_noise_model(*v);
  cfg.t_max = default_t_max(cfg.model);
  if (auto* v = get("a")) cfg.a = parse_double("a", *v);
  if (auto* v = get("b")) cfg.b = parse_double("b", *v);
  if (auto* v = get("c")) cfg.c = parse_double("c", *v);
  if (auto* v = get("noise_param")) cfg.noise_param = parse_double("noise_param", *v);
  if (auto* v = get("t_max")) cfg.t_max = parse_double("t_max", *v);
  if (auto* v = get("n_points")) cfg.n_points = parse_count("n_points", *v);
  if (auto* v = get("threshold")) cfg.threshold = parse_double("threshold", *v);
  if (auto* v = get("output_path")) cfg.output_path = *v;
  cfg.validate();
  return cfg;
}

PureState build_initial_state(double a, double b, double c) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
    throw std::invalid_argument("build_initial_state: weights must be non-negative");
  }
  const double sum = a + b + c;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("build_initial_state: a + b + c must equal 1");
  }
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = std::sqrt(a / sum);  // |00⟩
  psi(2) = std::sqrt(b / sum);  // |10⟩
  psi(3) = std::sqrt(c / sum);  // |11⟩
  psi /= psi.norm();
  return PureState(std::move(psi), {2, 2});
}

KrausChannel channel_at(NoiseModel model, double noise_param, double scaled_t) {
  if (model == NoiseModel::kDephasing) {
    return dephasing_channel(scaled_t, DephasingParams(noise_param));
  }
  return relaxation_channel(scaled_t, RelaxationParams(noise_param));
}

std::vector<double> time_grid(double t_max, std::size_t n_points) {
  if (n_points < 2) throw std::invalid_argument("time_grid: need at least two points");
  std::vector<double> t(n_points);
  const double denom = static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) t[k] = t_max * (static_cast<double>(k) / denom);
  return t;
}

std::vector<double> ScenarioResult::times() const { return column(&UncertaintyRecord::time); }

std::vector<double> ScenarioResult::column(double UncertaintyRecord::*field) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.record.*field);
  return out;
}

std::vector<double> ScenarioResult::column(double ScenarioRow::*field) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.*field);
  return out;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const PureState psi0 = build_initial_state(cfg.a, cfg.b, cfg.c);
  const DensityMatrix rho0 = psi0.projector();
  const Observable q = Observable::sigma_x();
  const Observable r = Observable::sigma_z();

  ScenarioResult result;
  result.config = cfg;
  result.rows.reserve(cfg.n_points);
  for (double t : time_grid(cfg.t_max, cfg.n_points)) {
    try {
      const KrausChannel ch = channel_at(cfg.model, cfg.noise_param, t);
      const DensityMatrix rho_t = apply_to_memory(rho0, ch);
      const TripartiteSnapshot snap = purify(psi0, ch);
      ScenarioRow row;
      row.record = evaluate_record(rho_t, q, r, t);
      row.s_a = snap.s_a;
      row.i_ae = snap.i_ae;
      row.i_be = snap.i_be;
      row.ternary_mi = snap.ternary_mi;
      result.rows.push_back(row);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "run_scenario: at t = " << t << ": " << e.what();
      throw std::runtime_error(os.str());
    }
  }

  const std::vector<double> times = result.times();
  const std::vector<double> i_ab = result.column(&UncertaintyRecord::i_ab);
  const std::vector<double> running = lfs_running_measure(i_ab, cfg.threshold);
  for (std::size_t k = 0; k < result.rows.size(); ++k) result.rows[k].lfs_running = running[k];
  result.report = lfs_analyze(times, i_ab, cfg.threshold);
  return result;
}

namespace {

void append_number(std::string& out, double x) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", x);
  out.append(buf, static_cast<std::size_t>(n));
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string format_csv(const ScenarioResult& result) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : result.rows) {
    const auto& rec = row.record;
    const double fields[] = {rec.time,        rec.u,    rec.ub,   rec.s_q_given_b,
                             rec.s_r_given_b, rec.s_a_given_b, rec.i_ab, row.i_ae,
                             row.lfs_running};
    bool first = true;
    for (double f : fields) {
      if (!first) out += ',';
      first = false;
      append_number(out, f);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const ScenarioResult& result, const std::filesystem::path& path) {
  write_file(path, format_csv(result));
}

namespace {

struct PlotFrame {
  double width = 640, height = 420;
  double left = 70, right = 20, top = 40, bottom = 60;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;

  double px(double x) const { return left + (x - x_min) / (x_max - x_min) * (width - left - right); }
  double py(double y) const { return height - bottom - (y - y_min) / (y_max - y_min) * (height - top - bottom); }
};

std::string fmt(double x, const char* spec = "%.2f") {
  char buf[32];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

void polyline(std::ostringstream& os, const PlotFrame& f, const std::vector<double>& xs,
              const std::vector<double>& ys, const char* id, const char* color, const char* dash) {
  os << "  <polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << color
     << "\" stroke-width=\"1.8\"";
  if (dash[0] != '\0') os << " stroke-dasharray=\"" << dash << "\"";
  os << " points=\"";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ' ';
    os << fmt(f.px(xs[k])) << ',' << fmt(f.py(ys[k]));
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const ScenarioResult& result) {
  const auto xs = result.times();
  const auto u = result.column(&UncertaintyRecord::u);
  const auto ub = result.column(&UncertaintyRecord::ub);
  const auto i_ab = result.column(&UncertaintyRecord::i_ab);

  PlotFrame f;
  f.x_min = 0.0;
  f.x_max = result.config.t_max;
  double lo = 0.0, hi = 1.0;
  for (const auto* series : {&u, &ub, &i_ab}) {
    for (double y : *series) {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
  f.y_min = std::floor(lo * 4.0) / 4.0;
  f.y_max = std::ceil(hi * 4.0) / 4.0;

  const auto& cfg = result.config;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
     << "\" viewBox=\"0 0 " << f.width << ' ' << f.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << f.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << to_string(cfg.model) << ", " << (cfg.model == NoiseModel::kDephasing ? "τ" : "λ/γ₀")
     << " = " << fmt(cfg.noise_param, "%g") << ", (a, b, c) = (" << fmt(cfg.a, "%g") << ", "
     << fmt(cfg.b, "%g") << ", " << fmt(cfg.c, "%g") << ")</text>\n";

  // Axes and ticks.
  const double x0 = f.px(f.x_min), x1 = f.px(f.x_max), y0 = f.py(f.y_min), y1 = f.py(f.y_max);
  os << "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  os << "    <line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1) << "\" y2=\"" << fmt(y0) << "\"/>\n";
  os << "    <line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0) << "\" y2=\"" << fmt(y1) << "\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = f.x_min + (f.x_max - f.x_min) * i / kTicks;
    const double yv = f.y_min + (f.y_max - f.y_min) * i / kTicks;
    os << "    <line x1=\"" << fmt(f.px(xv)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(f.px(xv))
       << "\" y2=\"" << fmt(y0 + 5) << "\"/>\n";
    os << "    <line x1=\"" << fmt(x0 - 5) << "\" y1=\"" << fmt(f.py(yv)) << "\" x2=\"" << fmt(x0)
       << "\" y2=\"" << fmt(f.py(yv)) << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g id=\"tick-labels\" fill=\"black\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = f.x_min + (f.x_max - f.x_min) * i / kTicks;
    const double yv = f.y_min + (f.y_max - f.y_min) * i / kTicks;
    os << "    <text x=\"" << fmt(f.px(xv)) << "\" y=\"" << fmt(y0 + 18) << "\" text-anchor=\"middle\">"
       << fmt(xv, "%g") << "</text>\n";
    os << "    <text x=\"" << fmt(x0 - 8) << "\" y=\"" << fmt(f.py(yv) + 4) << "\" text-anchor=\"end\">"
       << fmt(yv, "%g") << "</text>\n";
  }
  os << "  </g>\n";
  os << "  <text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(f.height - 18)
     << "\" text-anchor=\"middle\">" << time_axis_label(cfg.model) << "</text>\n";
  os << "  <text x=\"18\" y=\"" << fmt((y0 + y1) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << fmt((y0 + y1) / 2) << ")\">bits</text>\n";

  polyline(os, f, xs, u, "u", "#d62728", "");
  polyline(os, f, xs, ub, "ub", "#1f77b4", "8,5");
  polyline(os, f, xs, i_ab, "i_ab", "#2ca02c", "2,3");

  // Legend.
  const double lx = x1 - 150, ly = y1 + 10;
  const struct {
    const char* label;
    const char* color;
    const char* dash;
  } entries[] = {{"U(t)", "#d62728", ""}, {"UB(t)", "#1f77b4", "8,5"}, {"I(ρ_AB)", "#2ca02c", "2,3"}};
  os << "  <g id=\"legend\">\n";
  for (int i = 0; i < 3; ++i) {
    const double y = ly + 16.0 * i;
    os << "    <line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(lx + 30) << "\" y2=\""
       << fmt(y) << "\" stroke=\"" << entries[i].color << "\" stroke-width=\"1.8\"";
    if (entries[i].dash[0] != '\0') os << " stroke-dasharray=\"" << entries[i].dash << "\"";
    os << "/>\n";
    os << "    <text x=\"" << fmt(lx + 36) << "\" y=\"" << fmt(y + 4) << "\">" << entries[i].label << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const ScenarioResult& result, const std::filesystem::path& path) {
  write_file(path, render_svg(result));
}

std::vector<Preset> figure_presets(std::size_t n_points) {
  struct Weights {
    double a, b, c;
  };
  struct Figure {
    const char* prefix;
    NoiseModel model;
    Weights second_state;
    double params[3];
  };
  const Figure figures[] = {
      {"fig2", NoiseModel::kDephasing, {0.5, 0.2, 0.3}, {0.1, 5.0, 20.0}},
      {"fig3", NoiseModel::kRelaxation, {0.5, 0.4, 0.1}, {3.0, 0.1, 0.03}},
  };

  std::vector<Preset> presets;
  for (const auto& fig : figures) {
    const Weights states[] = {{0.5, 0.0, 0.5}, fig.second_state};
    char panel = 'a';
    for (const auto& w : states) {
      for (double param : fig.params) {
        ScenarioConfig cfg;
        cfg.model = fig.model;
        cfg.a = w.a;
        cfg.b = w.b;
        cfg.c = w.c;
        cfg.noise_param = param;
        cfg.t_max = default_t_max(fig.model);
        cfg.n_points = n_points;
        presets.push_back({std::string(fig.prefix) + panel, cfg});
        ++panel;
      }
    }
  }
  return presets;
}

}  // namespace memur
