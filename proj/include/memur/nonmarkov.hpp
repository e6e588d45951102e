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

#include <span>
#include <utility>
#include <vector>

namespace memur {

inline constexpr double kDefaultRevivalThreshold = 1e-9;

struct RevivalInterval {
  double start = 0.0;
  double end = 0.0;
};

/// Mutual-information revivals of a sampled I_AB(t).
struct RevivalReport {
  double total_measure = 0.0;  ///< bits
  std::vector<RevivalInterval> revival_intervals;
  bool is_markovian = true;
};

/// Sums the grid increments I(t_{k+1}) - I(t_k) that exceed `threshold`.
/// A revival interval is a maximal run of consecutive such increments, from
/// the first sample of the run to the last. The series is Markovian-looking
/// when the total does not exceed `threshold`.
///
/// Throws std::invalid_argument for mismatched lengths, fewer than two
/// samples, times that are not strictly ascending, or a negative threshold.
RevivalReport lfs_analyze(std::span<const double> times, std::span<const double> i_ab,
                          double threshold = kDefaultRevivalThreshold);

/// Cumulative version of the total measure: entry k is the sum over
/// increments up to sample k (entry 0 is 0).
std::vector<double> lfs_running_measure(std::span<const double> i_ab,
                                        double threshold = kDefaultRevivalThreshold);

}  // namespace memur
