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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace memur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions in tensor order. Index 0 is the leftmost factor
/// (A in A ⊗ B ⊗ E) and the most significant digit of a basis index.
using Dims = std::vector<std::size_t>;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-10;
inline constexpr double kPureNorm = 1e-12;
inline constexpr double kEigenInputHermitian = 1e-8;
inline constexpr double kShannonNegative = 1e-12;
inline constexpr double kShannonSum = 1e-10;
}  // namespace tol

/// Element-wise comparison with an absolute tolerance. Shape mismatch is
/// never equal.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

/// max |m - m†|
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix identity(std::size_t n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product, a is the more significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v⟩⟨v|
ComplexMatrix outer(const ComplexVector& v);

std::size_t product(const Dims& dims);

/// Real spectrum of a Hermitian matrix in ascending order.
/// Throws std::invalid_argument for non-square or non-Hermitian input
/// (tolerance tol::kEigenInputHermitian).
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// A validated quantum state: Hermitian, unit trace, positive semidefinite,
/// with subsystem structure. Immutable once built; the spectrum computed
/// during validation is kept for the entropy functionals.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument when any invariant fails.
  DensityMatrix(ComplexMatrix matrix, Dims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  /// Ascending eigenvalues, unclamped.
  const RealVector& spectrum() const { return spectrum_; }

 private:
  ComplexMatrix matrix_;
  Dims dims_;
  RealVector spectrum_;
};

/// Normalized state vector with subsystem structure.
class PureState {
 public:
  /// Throws std::invalid_argument if the squared norm is off by more than
  /// tol::kPureNorm or the dims do not match the vector length.
  PureState(ComplexVector amplitudes, Dims dims);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }

  DensityMatrix projector() const;

 private:
  ComplexVector amplitudes_;
  Dims dims_;
};

/// Reduced state over the subsystems listed in `keep` (any order, no
/// duplicates); the result keeps the original subsystem order.
/// Throws std::invalid_argument if `keep` is empty, covers every subsystem,
/// repeats an index or is out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

/// Entropy in bits from a spectrum. Eigenvalues in [-1e-10, 0) count as 0;
/// anything more negative throws std::domain_error.
double entropy_from_spectrum(std::span<const double> eigenvalues);

/// -tr[ρ log2 ρ]
double von_neumann_entropy(const DensityMatrix& rho);

/// -Σ p log2 p with 0 log 0 = 0. Entries down to -1e-12 are clamped to 0;
/// throws std::invalid_argument when an entry is more negative or the sum is
/// off by more than 1e-10.
double shannon_entropy(std::span<const double> p);

}  // namespace memur
