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

#include "memur/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace memur {

double completeness_defect(const std::vector<ComplexMatrix>& operators) {
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return (sum - identity(2)).cwiseAbs().maxCoeff();
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, double time_label)
    : operators_(std::move(operators)), time_label_(time_label) {
  if (operators_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  for (const auto& k : operators_) {
    if (k.rows() != 2 || k.cols() != 2) {
      throw std::invalid_argument("KrausChannel: operators must be 2x2");
    }
  }
  const double defect = completeness_defect(operators_);
  if (defect > tol::kCompleteness) {
    std::ostringstream os;
    os << "KrausChannel: completeness violated by " << defect;
    throw std::invalid_argument(os.str());
  }
}

KrausChannel KrausChannel::identity(double time_label) {
  return KrausChannel({memur::identity(2), ComplexMatrix::Zero(2, 2)}, time_label);
}

DephasingParams::DephasingParams(double tau) : tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("DephasingParams: tau must be positive");
  }
}

RelaxationParams::RelaxationParams(double lambda_over_gamma0) : ratio_(lambda_over_gamma0) {
  if (!(lambda_over_gamma0 > 0.0) || !std::isfinite(lambda_over_gamma0)) {
    throw std::invalid_argument("RelaxationParams: lambda/gamma0 must be positive");
  }
}

double lambda_rtn(double nu, const DephasingParams& params) {
  if (!(nu >= 0.0)) throw std::invalid_argument("lambda_rtn: nu must be non-negative");
  const double four_tau = 4.0 * params.tau();
  // (4τ)² - 1 in factored form, exact zero at τ = 1/4.
  const double mu_sq = (four_tau - 1.0) * (four_tau + 1.0);

  if (mu_sq > 0.0) {
    const double mu = std::sqrt(mu_sq);
    return std::exp(-nu) * (std::cos(mu * nu) + std::sin(mu * nu) / mu);
  }
  if (mu_sq < 0.0) {
    // 0 < m < 1, so every exponent below is non-positive.
    const double m = std::sqrt(-mu_sq);
    const double grow = std::exp((m - 1.0) * nu);
    const double decay = std::exp(-(m + 1.0) * nu);
    return 0.5 * (grow + decay) + 0.5 * (grow - decay) / m;
  }
  return std::exp(-nu) * (1.0 + nu);
}

double p_relax(double scaled_t, const RelaxationParams& params) {
  if (!(scaled_t >= 0.0)) throw std::invalid_argument("p_relax: time must be non-negative");
  const double lambda = params.lambda_over_gamma0();
  const double t = scaled_t;
  const double d_sq = (2.0 - lambda) * lambda;

  double amplitude = 0.0;
  if (d_sq > 0.0) {
    const double d = std::sqrt(d_sq);
    amplitude = std::exp(-0.5 * lambda * t) *
                (std::cos(0.5 * d * t) + (lambda / d) * std::sin(0.5 * d * t));
  } else if (d_sq < 0.0) {
    // d̃ < λ: expand cosh/sinh so the decaying prefactor is folded in.
    const double dt = std::sqrt(-d_sq);
    const double grow = std::exp(0.5 * (dt - lambda) * t);
    const double decay = std::exp(-0.5 * (dt + lambda) * t);
    amplitude = 0.5 * (grow + decay) + 0.5 * (lambda / dt) * (grow - decay);
  } else {
    amplitude = std::exp(-0.5 * lambda * t) * (1.0 + 0.5 * lambda * t);
  }
  return amplitude * amplitude;
}

namespace {

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

KrausChannel dephasing_channel(double nu, const DephasingParams& params) {
  const double lambda = lambda_rtn(nu, params);
  ComplexMatrix k1 = clamped_sqrt(0.5 * (1.0 + lambda)) * identity(2);
  ComplexMatrix k2 = clamped_sqrt(0.5 * (1.0 - lambda)) * pauli_z();
  return KrausChannel({std::move(k1), std::move(k2)}, nu);
}

KrausChannel relaxation_channel(double scaled_t, const RelaxationParams& params) {
  const double p = p_relax(scaled_t, params);
  ComplexMatrix m1 = ComplexMatrix::Zero(2, 2);
  m1(0, 0) = 1.0;
  m1(1, 1) = clamped_sqrt(p);
  ComplexMatrix m2 = ComplexMatrix::Zero(2, 2);
  m2(0, 1) = clamped_sqrt(1.0 - p);
  return KrausChannel({std::move(m1), std::move(m2)}, scaled_t);
}

DensityMatrix apply_to_memory(const DensityMatrix& rho_ab, const KrausChannel& ch) {
  if (rho_ab.dims() != Dims{2, 2}) {
    throw std::invalid_argument("apply_to_memory: state must be a two-qubit state");
  }
  const ComplexMatrix id = identity(2);
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (const auto& k : ch.operators()) {
    const ComplexMatrix lifted = kron(id, k);
    out += lifted * rho_ab.matrix() * lifted.adjoint();
  }
  return DensityMatrix(std::move(out), {2, 2});
}

}  // namespace memur
