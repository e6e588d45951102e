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

#include <string>
#include <vector>

#include "memur/linalg.hpp"

namespace memur {

namespace tol {
inline constexpr double kOrthonormal = 1e-10;
}  // namespace tol

/// Projective measurement basis on a qubit.
class Observable {
 public:
  /// Throws std::invalid_argument unless the vectors are a complete
  /// orthonormal set of 2-vectors (|⟨ψi|ψj⟩ - δij| < 1e-10).
  Observable(std::string name, std::vector<ComplexVector> eigenvectors);

  const std::string& name() const { return name_; }
  const std::vector<ComplexVector>& eigenvectors() const { return eigenvectors_; }

  /// (1, 1)/√2 then (1, -1)/√2.
  static Observable sigma_x();
  /// |0⟩ then |1⟩.
  static Observable sigma_z();

 private:
  std::string name_;
  std::vector<ComplexVector> eigenvectors_;
};

struct UncertaintyRecord {
  double time = 0.0;
  double s_q_given_b = 0.0;
  double s_r_given_b = 0.0;
  double u = 0.0;
  double s_a_given_b = 0.0;
  double ub = 0.0;
  double i_ab = 0.0;
};

/// ρ_XB = Σj (|ψj⟩⟨ψj| ⊗ I) ρ (|ψj⟩⟨ψj| ⊗ I).
DensityMatrix measure_subsystem_a(const DensityMatrix& rho_ab, const Observable& obs);

/// S(ρ_AB) - S(ρ_B). Negative for states that are entangled enough.
double conditional_entropy(const DensityMatrix& rho_ab);

/// 1/c = 1 / max_ij |⟨ψi|φj⟩|²
double complementarity(const Observable& q, const Observable& r);

/// S(ρ_A) + S(ρ_B) - S(ρ_AB)
double mutual_information(const DensityMatrix& rho_ab);

/// Every quantity entering the memory-assisted relation
/// S(Q|B) + S(R|B) >= log2(1/c) + S(A|B) at one time point.
UncertaintyRecord evaluate_record(const DensityMatrix& rho_ab_t, const Observable& q,
                                  const Observable& r, double time);

}  // namespace memur
