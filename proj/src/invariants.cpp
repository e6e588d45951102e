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

#include "memur/invariants.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "memur/dilation.hpp"

namespace memur {

namespace {

constexpr const char* kFaultKeys[] = {"u",          "ub",         "i_ab",         "i_ae",
                                      "s_a_given_b", "s_r_given_b", "ternary_mi", "log2_inv_c",
                                      "completeness", "purification"};

double offset(const FaultInjection& fault, const char* key) {
  auto it = fault.find(key);
  return it == fault.end() ? 0.0 : it->second;
}

void perturb(ScenarioResult& result, const FaultInjection& fault) {
  if (fault.empty()) return;
  for (auto& row : result.rows) {
    row.record.u += offset(fault, "u");
    row.record.ub += offset(fault, "ub");
    row.record.i_ab += offset(fault, "i_ab");
    row.record.s_a_given_b += offset(fault, "s_a_given_b");
    row.record.s_r_given_b += offset(fault, "s_r_given_b");
    row.i_ae += offset(fault, "i_ae");
    row.ternary_mi += offset(fault, "ternary_mi");
  }
}

// Tracks the worst value of a quantity that must stay at or below a limit.
struct Tracker {
  double worst = -std::numeric_limits<double>::infinity();
  std::string where;
  void observe(double value, const std::string& context) {
    if (value > worst || std::isnan(value)) {
      worst = value;
      where = context;
    }
  }
};

CheckResult finish(std::string id, std::string description, const Tracker& t, double limit) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.worst = t.worst;
  r.passed = !std::isnan(t.worst) && t.worst <= limit;
  std::ostringstream os;
  os << "worst " << t.worst << " (limit " << limit << ")";
  if (!t.where.empty()) os << " at " << t.where;
  r.detail = os.str();
  return r;
}

std::string at(const std::string& name, double t) {
  std::ostringstream os;
  os << name << " t=" << t;
  return os.str();
}

const ScenarioResult& find(const std::vector<std::pair<Preset, ScenarioResult>>& runs,
                           const std::string& name) {
  for (const auto& [p, r] : runs) {
    if (p.name == name) return r;
  }
  throw std::logic_error("missing preset " + name);
}

}  // namespace

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

FaultInjection parse_fault(const std::vector<std::string>& entries) {
  FaultInjection fault;
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("fault '" + entry + "': expected key=offset");
    const std::string key = entry.substr(0, eq);
    if (std::find_if(std::begin(kFaultKeys), std::end(kFaultKeys),
                     [&](const char* k) { return key == k; }) == std::end(kFaultKeys)) {
      throw std::invalid_argument("fault '" + entry + "': unknown quantity");
    }
    const std::string value = entry.substr(eq + 1);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw std::invalid_argument("fault '" + entry + "': offset is not a number");
    }
    fault[key] += x;
  }
  return fault;
}

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options) {
  const FaultInjection& fault = options.fault;
  std::vector<CheckResult> results;

  std::vector<std::pair<Preset, ScenarioResult>> runs;
  for (const auto& preset : figure_presets(options.n_points)) {
    ScenarioResult r = run_scenario(preset.config);
    perturb(r, fault);
    runs.emplace_back(preset, std::move(r));
  }

  // Random scenarios: uniform weights on the simplex, log-uniform memory parameter.
  std::vector<std::pair<std::string, ScenarioResult>> random_runs;
  {
    std::mt19937_64 rng(options.seed);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 0; k < options.random_draws; ++k) {
      ScenarioConfig cfg;
      const double e1 = expo(rng), e2 = expo(rng), e3 = expo(rng);
      const double s = e1 + e2 + e3;
      cfg.a = e1 / s;
      cfg.b = e2 / s;
      cfg.c = 1.0 - cfg.a - cfg.b;
      if (cfg.c < 0.0) cfg.c = 0.0;
      cfg.model = (k % 2 == 0) ? NoiseModel::kDephasing : NoiseModel::kRelaxation;
      const double u = unit(rng);
      cfg.noise_param = cfg.model == NoiseModel::kDephasing ? 0.05 * std::pow(1000.0, u)
                                                             : 0.01 * std::pow(1000.0, u);
      cfg.t_max = default_t_max(cfg.model);
      cfg.n_points = options.random_points;
      ScenarioResult r = run_scenario(cfg);
      perturb(r, fault);
      std::ostringstream name;
      name << "random#" << k << " " << to_string(cfg.model) << " p=" << cfg.noise_param;
      random_runs.emplace_back(name.str(), std::move(r));
    }
  }

  // C01
  {
    Tracker t;
    const double v = std::log2(complementarity(Observable::sigma_x(), Observable::sigma_z())) +
                     offset(fault, "log2_inv_c");
    t.observe(std::abs(v - 1.0), "sigma1/sigma3");
    results.push_back(finish("C01", "log2(1/c) = 1 for (sigma1, sigma3)", t, 1e-12));
  }

  // C02
  {
    Tracker t;
    const auto& row = find(runs, "fig2a").rows.front();
    const auto& rec = row.record;
    t.observe(std::abs(rec.u), "U");
    t.observe(std::abs(rec.ub), "UB");
    t.observe(std::abs(rec.s_a_given_b + 1.0), "S(A|B)");
    t.observe(std::abs(rec.i_ab - 2.0), "I_AB");
    results.push_back(finish("C02", "Bell state at t=0: U=0, UB=0, S(A|B)=-1, I_AB=2", t, 1e-10));
  }

  // C03
  {
    Tracker t;
    auto scan = [&](const std::string& name, const ScenarioResult& r) {
      for (const auto& row : r.rows) t.observe(row.record.ub - row.record.u, at(name, row.record.time));
    };
    for (const auto& [p, r] : runs) scan(p.name, r);
    for (const auto& [n, r] : random_runs) scan(n, r);
    results.push_back(finish("C03", "U >= UB on all presets and random draws", t, 1e-9));
  }

  // C04
  {
    Tracker identity_gap, increment_gap;
    auto scan = [&](const std::string& name, const ScenarioResult& r) {
      for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const auto& row = r.rows[k];
        identity_gap.observe(std::abs(row.record.i_ab + row.record.s_a_given_b - row.s_a),
                             at(name, row.record.time));
        if (k > 0) {
          const auto& prev = r.rows[k - 1].record;
          const double d_i = row.record.i_ab - prev.i_ab;
          const double d_s = row.record.s_a_given_b - prev.s_a_given_b;
          increment_gap.observe(std::abs(d_i + d_s), at(name, row.record.time));
        }
      }
    };
    for (const auto& [p, r] : runs) scan(p.name, r);
    for (const auto& [n, r] : random_runs) scan(n, r);
    results.push_back(finish("C04a", "I_AB + S(A|B) = S(rho_A)", identity_gap, 1e-10));
    results.push_back(finish("C04b", "dI_AB = -dS(A|B) between grid points", increment_gap, 1e-9));
  }

  // C05
  {
    Tracker sum_gap, ternary;
    for (const auto& [p, r] : runs) {
      for (const auto& row : r.rows) {
        sum_gap.observe(std::abs(row.record.i_ab + row.i_ae - 2.0 * row.s_a), at(p.name, row.record.time));
        ternary.observe(std::abs(row.ternary_mi), at(p.name, row.record.time));
      }
    }
    results.push_back(finish("C05a", "I_AB + I_AE = 2 S(rho_A)", sum_gap, 1e-9));
    results.push_back(finish("C05b", "ternary mutual information vanishes", ternary, 1e-9));
  }

  // C06
  {
    Tracker bound, s_r, tight;
    for (const char* name : {"fig2a", "fig2b", "fig2c"}) {
      const auto& r = find(runs, name);
      const DephasingParams params(r.config.noise_param);
      for (const auto& row : r.rows) {
        const double lam = lambda_rtn(row.record.time, params);
        const std::string where = at(name, row.record.time);
        bound.observe(std::abs(row.record.ub - binary_entropy(0.5 * (1.0 + lam))), where);
        s_r.observe(std::abs(row.record.s_r_given_b), where);
        tight.observe(std::abs(row.record.u - row.record.ub), where);
      }
    }
    results.push_back(finish("C06a", "dephased Bell: UB = h((1+Lambda)/2)", bound, 1e-9));
    results.push_back(finish("C06b", "dephased Bell: S(sigma3|B) = 0", s_r, 1e-10));
    results.push_back(finish("C06c", "dephased Bell: U = UB", tight, 1e-9));
  }

  // C07
  {
    Tracker measure, drop;
    for (const char* name : {"fig2a", "fig2d", "fig3a", "fig3d"}) {
      const auto& r = find(runs, name);
      measure.observe(r.report.total_measure, name);
      for (std::size_t k = 1; k < r.rows.size(); ++k) {
        const auto& cur = r.rows[k].record;
        const auto& prev = r.rows[k - 1].record;
        drop.observe(prev.u - cur.u, at(name, cur.time) + " U");
        drop.observe(prev.ub - cur.ub, at(name, cur.time) + " UB");
      }
    }
    results.push_back(finish("C07a", "Markovian presets: LFS measure < 1e-6", measure, 1e-6));
    results.push_back(finish("C07b", "Markovian presets: U and UB non-decreasing", drop, 1e-9));
  }

  // C08
  {
    CheckResult r;
    r.id = "C08";
    r.description = "memory-effect ordering of LFS measures (Bell input)";
    const double d5 = find(runs, "fig2b").report.total_measure;
    const double d20 = find(runs, "fig2c").report.total_measure;
    const double r01 = find(runs, "fig3b").report.total_measure;
    const double r003 = find(runs, "fig3c").report.total_measure;
    r.passed = d20 > d5 && d5 > 0.0 && r003 > r01 && r01 > 0.0;
    r.worst = std::min(d20 - d5, r003 - r01);
    std::ostringstream os;
    os << "tau=20: " << d20 << ", tau=5: " << d5 << ", lambda=0.03: " << r003 << ", lambda=0.1: " << r01;
    r.detail = os.str();
    results.push_back(r);
  }

  // C09
  {
    Tracker t;
    for (const auto& [p, r] : runs) {
      const auto& rows = r.rows;
      for (const auto& interval : r.report.revival_intervals) {
        auto idx = [&](double time) {
          return static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), time,
                                                           [](const ScenarioRow& row, double v) {
                                                             return row.record.time < v;
                                                           }) -
                                          rows.begin());
        };
        const auto& s = rows[idx(interval.start)].record;
        const auto& e = rows[idx(interval.end)].record;
        t.observe(std::abs((e.ub - s.ub) + (e.i_ab - s.i_ab)), at(p.name, interval.start));
      }
    }
    results.push_back(finish("C09", "UB drops by the I_AB gain over every revival", t, 1e-9));
  }

  // C10
  {
    Tracker completeness, continuity;
    const double extra = offset(fault, "completeness");
    const auto grid_dephasing = time_grid(default_t_max(NoiseModel::kDephasing), 2000);
    const auto grid_relaxation = time_grid(default_t_max(NoiseModel::kRelaxation), 2000);
    for (double tau : {0.05, 0.1, 0.2, 0.25, 0.3, 5.0, 20.0}) {
      for (double nu : grid_dephasing) {
        const auto ch = dephasing_channel(nu, DephasingParams(tau));
        completeness.observe(completeness_defect(ch.operators()) + extra, at("dephasing", nu));
      }
    }
    for (double ratio : {0.03, 0.1, 1.0, 2.0, 2.5, 3.0, 10.0}) {
      for (double t : grid_relaxation) {
        const auto ch = relaxation_channel(t, RelaxationParams(ratio));
        completeness.observe(completeness_defect(ch.operators()) + extra, at("relaxation", t));
      }
    }
    const DephasingParams below(0.25 - 1e-6), critical(0.25), above(0.25 + 1e-6);
    for (double nu : grid_dephasing) {
      const double mid = lambda_rtn(nu, critical);
      continuity.observe(std::abs(lambda_rtn(nu, below) - mid), at("tau=1/4", nu));
      continuity.observe(std::abs(lambda_rtn(nu, above) - mid), at("tau=1/4", nu));
    }
    const RelaxationParams lo(2.0 - 1e-6), crit(2.0), hi(2.0 + 1e-6);
    for (double t : grid_relaxation) {
      const double mid = p_relax(t, crit);
      continuity.observe(std::abs(p_relax(t, lo) - mid), at("lambda=2", t));
      continuity.observe(std::abs(p_relax(t, hi) - mid), at("lambda=2", t));
    }
    results.push_back(finish("C10a", "Kraus completeness", completeness, 1e-12));
    results.push_back(finish("C10b", "continuity across the critical parameter", continuity, 1e-4));
  }

  // C11
  {
    Tracker t;
    const double extra = offset(fault, "purification");
    for (const auto& [p, r] : runs) {
      const auto& cfg = p.config;
      const PureState psi0 = build_initial_state(cfg.a, cfg.b, cfg.c);
      const DensityMatrix rho0 = psi0.projector();
      for (double time : time_grid(cfg.t_max, cfg.n_points)) {
        const auto ch = channel_at(cfg.model, cfg.noise_param, time);
        const auto via_dilation = purify(psi0, ch).reduced_ab();
        const auto via_kraus = apply_to_memory(rho0, ch);
        t.observe((via_dilation.matrix() - via_kraus.matrix()).cwiseAbs().maxCoeff() + extra,
                  at(p.name, time));
      }
    }
    results.push_back(finish("C11", "tr_E of the dilation equals the Kraus evolution", t, 1e-10));
  }

  return results;
}

}  // namespace memur
