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

#include "memur/dilation.hpp"

#include <stdexcept>

namespace memur {

DensityMatrix TripartiteSnapshot::reduced_ab() const {
  return partial_trace(state.projector(), {0, 1});
}

TripartiteSnapshot purify(const PureState& initial, const KrausChannel& ch) {
  if (initial.dims() != Dims{2, 2}) {
    throw std::invalid_argument("purify: initial state must have dims [2,2]");
  }
  const auto k = static_cast<Eigen::Index>(ch.size());
  const ComplexMatrix id = identity(2);

  ComplexVector joint = ComplexVector::Zero(4 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const ComplexVector branch = kron(id, ch.operators()[static_cast<std::size_t>(i)]) *
                                 initial.amplitudes();
    for (Eigen::Index ab = 0; ab < 4; ++ab) joint(ab * k + i) = branch(ab);
  }
  // Completeness of the Kraus set makes this an isometry, so the norm only
  // carries float noise.
  joint /= joint.norm();

  PureState state(std::move(joint), {2, 2, static_cast<std::size_t>(k)});
  const DensityMatrix rho = state.projector();

  const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
  const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
  const double s_e = von_neumann_entropy(partial_trace(rho, {2}));
  const double s_ab = von_neumann_entropy(partial_trace(rho, {0, 1}));
  const double s_ae = von_neumann_entropy(partial_trace(rho, {0, 2}));
  const double s_be = von_neumann_entropy(partial_trace(rho, {1, 2}));
  const double s_abe = von_neumann_entropy(rho);

  return TripartiteSnapshot{
      .state = std::move(state),
      .s_a = s_a,
      .i_ab = s_a + s_b - s_ab,
      .i_ae = s_a + s_e - s_ae,
      .i_be = s_b + s_e - s_be,
      .ternary_mi = s_a + s_b + s_e - s_ab - s_ae - s_be + s_abe,
  };
}

}  // namespace memur
