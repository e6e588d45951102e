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

#include <vector>

#include "memur/linalg.hpp"

namespace memur {

namespace tol {
inline constexpr double kCompleteness = 1e-10;
}  // namespace tol

/// Operator-sum representation of a single-qubit channel at one instant.
class KrausChannel {
 public:
  /// Throws std::invalid_argument when the operators are not all 2x2 or
  /// Σ K†K deviates from the identity by more than tol::kCompleteness.
  KrausChannel(std::vector<ComplexMatrix> operators, double time_label);

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  double time_label() const { return time_label_; }
  std::size_t size() const { return operators_.size(); }

  static KrausChannel identity(double time_label = 0.0);

 private:
  std::vector<ComplexMatrix> operators_;
  double time_label_;
};

/// max |Σ K†K - I|
double completeness_defect(const std::vector<ComplexMatrix>& operators);

/// Random-telegraph (colored) dephasing, memory parameter τ > 0.
/// Time is the scaled variable ν = t/2τ.
class DephasingParams {
 public:
  explicit DephasingParams(double tau);
  double tau() const { return tau_; }

 private:
  double tau_;
};

/// Zero-temperature relaxation into a Lorentzian bath, characterised by
/// λ/γ0 > 0. Time is γ0·t, i.e. γ0 = 1.
class RelaxationParams {
 public:
  explicit RelaxationParams(double lambda_over_gamma0);
  double lambda_over_gamma0() const { return ratio_; }

 private:
  double ratio_;
};

/// Decoherence factor Λ(ν) = e^{-ν}[cos(μν) + sin(μν)/μ], μ = sqrt((4τ)²-1).
/// τ < 1/4 uses the real hyperbolic continuation and τ = 1/4 its limit
/// e^{-ν}(1+ν). Throws std::invalid_argument for ν < 0.
double lambda_rtn(double nu, const DephasingParams& params);

/// Excited-state population p(t) = e^{-λt}[cos(dt/2) + (λ/d) sin(dt/2)]²,
/// d = sqrt(2λ - λ²) with γ0 = 1. λ > 2 switches to cosh/sinh and λ = 2
/// uses e^{-λt}(1 + λt/2)². Throws std::invalid_argument for t < 0.
double p_relax(double scaled_t, const RelaxationParams& params);

/// K1 = sqrt((1+Λ)/2) I, K2 = sqrt((1-Λ)/2) σ3.
KrausChannel dephasing_channel(double nu, const DephasingParams& params);

/// M1 = diag(1, sqrt(p)), M2 = sqrt(1-p) |0⟩⟨1|.
KrausChannel relaxation_channel(double scaled_t, const RelaxationParams& params);

/// Σ (I ⊗ K) ρ (I ⊗ K)† on the memory qubit B of a two-qubit state.
/// Always apply the time-t channel to the initial state; the families are
/// not semigroups. Throws std::invalid_argument unless ρ has dims [2,2].
DensityMatrix apply_to_memory(const DensityMatrix& rho_ab, const KrausChannel& ch);

}  // namespace memur
