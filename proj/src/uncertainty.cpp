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

#include "memur/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace memur {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* where) {
  if (rho.dims() != Dims{2, 2}) {
    throw std::invalid_argument(std::string(where) + ": state must have dims [2,2]");
  }
}

}  // namespace

Observable::Observable(std::string name, std::vector<ComplexVector> eigenvectors)
    : name_(std::move(name)), eigenvectors_(std::move(eigenvectors)) {
  if (eigenvectors_.size() != 2) {
    throw std::invalid_argument("Observable: a qubit basis needs exactly two vectors");
  }
  for (const auto& v : eigenvectors_) {
    if (v.size() != 2) throw std::invalid_argument("Observable: eigenvectors must be 2-vectors");
  }
  for (std::size_t i = 0; i < eigenvectors_.size(); ++i) {
    for (std::size_t j = 0; j < eigenvectors_.size(); ++j) {
      const Complex overlap = eigenvectors_[i].dot(eigenvectors_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) >= tol::kOrthonormal) {
        throw std::invalid_argument("Observable: basis is not orthonormal");
      }
    }
  }
}

Observable Observable::sigma_x() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector plus(2), minus(2);
  plus << s, s;
  minus << s, -s;
  return Observable("sigma1", {plus, minus});
}

Observable Observable::sigma_z() {
  ComplexVector zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  return Observable("sigma3", {zero, one});
}

DensityMatrix measure_subsystem_a(const DensityMatrix& rho_ab, const Observable& obs) {
  require_two_qubits(rho_ab, "measure_subsystem_a");
  const ComplexMatrix id = identity(2);
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (const auto& v : obs.eigenvectors()) {
    const ComplexMatrix proj = kron(outer(v), id);
    out += proj * rho_ab.matrix() * proj;
  }
  return DensityMatrix(std::move(out), {2, 2});
}

double conditional_entropy(const DensityMatrix& rho_ab) {
  require_two_qubits(rho_ab, "conditional_entropy");
  return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace(rho_ab, {1}));
}

double complementarity(const Observable& q, const Observable& r) {
  double max_overlap = 0.0;
  for (const auto& psi : q.eigenvectors()) {
    for (const auto& phi : r.eigenvectors()) {
      max_overlap = std::max(max_overlap, std::norm(psi.dot(phi)));
    }
  }
  return 1.0 / max_overlap;
}

double mutual_information(const DensityMatrix& rho_ab) {
  require_two_qubits(rho_ab, "mutual_information");
  return von_neumann_entropy(partial_trace(rho_ab, {0})) +
         von_neumann_entropy(partial_trace(rho_ab, {1})) - von_neumann_entropy(rho_ab);
}

UncertaintyRecord evaluate_record(const DensityMatrix& rho_ab_t, const Observable& q,
                                  const Observable& r, double time) {
  require_two_qubits(rho_ab_t, "evaluate_record");
  const double s_a = von_neumann_entropy(partial_trace(rho_ab_t, {0}));
  const double s_b = von_neumann_entropy(partial_trace(rho_ab_t, {1}));
  const double s_ab = von_neumann_entropy(rho_ab_t);

  // Measuring A leaves ρ_B untouched, so S(B) is shared by all three
  // conditional entropies.
  UncertaintyRecord rec;
  rec.time = time;
  rec.s_q_given_b = von_neumann_entropy(measure_subsystem_a(rho_ab_t, q)) - s_b;
  rec.s_r_given_b = von_neumann_entropy(measure_subsystem_a(rho_ab_t, r)) - s_b;
  rec.u = rec.s_q_given_b + rec.s_r_given_b;
  rec.s_a_given_b = s_ab - s_b;
  rec.ub = std::log2(complementarity(q, r)) + rec.s_a_given_b;
  rec.i_ab = s_a + s_b - s_ab;
  return rec;
}

}  // namespace memur
