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

#include "memur/nonmarkov.hpp"

#include <stdexcept>

namespace memur {

RevivalReport lfs_analyze(std::span<const double> times, std::span<const double> i_ab,
                          double threshold) {
  if (times.size() != i_ab.size()) {
    throw std::invalid_argument("lfs_analyze: times and values differ in length");
  }
  if (times.size() < 2) throw std::invalid_argument("lfs_analyze: need at least two samples");
  if (!(threshold >= 0.0)) throw std::invalid_argument("lfs_analyze: threshold must be >= 0");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw std::invalid_argument("lfs_analyze: times must be strictly ascending");
    }
  }

  RevivalReport report;
  bool in_run = false;
  for (std::size_t k = 0; k + 1 < i_ab.size(); ++k) {
    const double inc = i_ab[k + 1] - i_ab[k];
    if (inc > threshold) {
      report.total_measure += inc;
      if (in_run) {
        report.revival_intervals.back().end = times[k + 1];
      } else {
        report.revival_intervals.push_back({times[k], times[k + 1]});
        in_run = true;
      }
    } else {
      in_run = false;
    }
  }
  report.is_markovian = report.total_measure <= threshold;
  return report;
}

std::vector<double> lfs_running_measure(std::span<const double> i_ab, double threshold) {
  std::vector<double> running(i_ab.size(), 0.0);
  for (std::size_t k = 1; k < i_ab.size(); ++k) {
    const double inc = i_ab[k] - i_ab[k - 1];
    running[k] = running[k - 1] + (inc > threshold ? inc : 0.0);
  }
  return running;
}

}  // namespace memur
