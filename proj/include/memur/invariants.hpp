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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "memur/scenario.hpp"

namespace memur {

/// Additive offsets applied to computed quantities before they are checked.
/// Used to prove that the suite notices a violation. Recognised keys:
/// u, ub, i_ab, i_ae, s_a_given_b, s_r_given_b, ternary_mi, log2_inv_c,
/// completeness, purification.
using FaultInjection = std::map<std::string, double>;

/// Throws std::invalid_argument on an unknown key or a malformed entry.
/// Entries look like `ub=1e-6`.
FaultInjection parse_fault(const std::vector<std::string>& entries);

struct SuiteOptions {
  std::size_t n_points = kDefaultPoints;
  std::size_t random_draws = 100;
  std::size_t random_points = 400;
  std::uint64_t seed = 20160315;
  FaultInjection fault;
};

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  double worst = 0.0;  ///< largest violation margin seen, or the measured value
  std::string detail;
};

/// Runs every quantitative invariant of the library over the figure presets
/// and random draws. Returns one result per check, in a fixed order.
std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options = {});

/// h(p) = -p log2 p - (1-p) log2 (1-p)
double binary_entropy(double p);

}  // namespace memur
