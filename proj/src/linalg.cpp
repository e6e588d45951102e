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

#include "memur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace memur {

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= abs_tol;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix::Identity(k, k);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square and non-empty");
  }
  if (hermiticity_defect(m) > tol::kEigenInputHermitian) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  }
  if (dims_.empty() || product(dims_) != static_cast<std::size_t>(matrix_.rows())) {
    throw std::invalid_argument("DensityMatrix: subsystem dims do not match matrix size");
  }
  const double herm = hermiticity_defect(matrix_);
  if (herm > tol::kHermitian) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (defect " << herm << ")";
    throw std::invalid_argument(os.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kTrace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " is not 1";
    throw std::invalid_argument(os.str());
  }
  spectrum_ = hermitian_eigenvalues(matrix_);
  if (spectrum_(0) < -tol::kNegativeEigenvalue) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << spectrum_(0);
    throw std::invalid_argument(os.str());
  }
}

PureState::PureState(ComplexVector amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty() || product(dims_) != static_cast<std::size_t>(amplitudes_.size())) {
    throw std::invalid_argument("PureState: subsystem dims do not match vector length");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kPureNorm) {
    throw std::invalid_argument("PureState: state is not normalized");
  }
}

DensityMatrix PureState::projector() const { return DensityMatrix(outer(amplitudes_), dims_); }

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  const Dims& dims = rho.dims();
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }
  if (keep.empty() || keep.size() == n) {
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  }

  Dims out_dims;
  for (std::size_t s = 0; s < n; ++s) {
    if (kept[s]) out_dims.push_back(dims[s]);
  }
  const std::size_t full = rho.dim();
  const std::size_t reduced = product(out_dims);

  // Digit decomposition of every basis index, most significant first.
  std::vector<std::size_t> kept_index(full), traced_index(full);
  for (std::size_t idx = 0; idx < full; ++idx) {
    std::size_t rem = idx;
    std::size_t k_idx = 0, t_idx = 0, k_stride = 1, t_stride = 1;
    for (std::size_t s = n; s-- > 0;) {
      const std::size_t digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        k_idx += digit * k_stride;
        k_stride *= dims[s];
      } else {
        t_idx += digit * t_stride;
        t_stride *= dims[s];
      }
    }
    kept_index[idx] = k_idx;
    traced_index[idx] = t_idx;
  }

  const auto r = static_cast<Eigen::Index>(reduced);
  ComplexMatrix out = ComplexMatrix::Zero(r, r);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < full; ++i) {
    for (std::size_t j = 0; j < full; ++j) {
      if (traced_index[i] != traced_index[j]) continue;
      out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return DensityMatrix(std::move(out), std::move(out_dims));
}

double entropy_from_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -tol::kNegativeEigenvalue) {
      throw std::domain_error("entropy: eigenvalue " + std::to_string(lambda) +
                              " is below the clamping window");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector& spec = rho.spectrum();
  return entropy_from_spectrum(std::span<const double>(spec.data(), static_cast<std::size_t>(spec.size())));
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -tol::kShannonNegative) {
      throw std::invalid_argument("shannon_entropy: negative probability");
    }
    sum += std::max(x, 0.0);
  }
  if (std::abs(sum - 1.0) > tol::kShannonSum) {
    throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  }
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace memur
