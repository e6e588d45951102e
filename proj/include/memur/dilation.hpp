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

#include "memur/channels.hpp"
#include "memur/linalg.hpp"

namespace memur {

/// Pure A⊗B⊗E state obtained by dilating the memory channel, together with
/// the pairwise and ternary mutual informations (bits).
struct TripartiteSnapshot {
  PureState state;
  double s_a = 0.0;
  double i_ab = 0.0;
  double i_ae = 0.0;
  double i_be = 0.0;
  double ternary_mi = 0.0;

  /// tr_E |Ψ⟩⟨Ψ|
  DensityMatrix reduced_ab() const;
};

/// |Ψ_ABE⟩ = Σi (I ⊗ Ki)|Ψ_AB⟩ ⊗ |i⟩_E, one environment level per Kraus
/// operator (zero operators included so the environment size is fixed).
///
/// Throws std::invalid_argument if `initial` is not a normalized [2,2] state.
TripartiteSnapshot purify(const PureState& initial, const KrausChannel& ch);

}  // namespace memur
