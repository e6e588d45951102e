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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "memur/linalg.hpp"
#include "oracles.hpp"

using namespace memur;

namespace {

ComplexVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("kron") {
  CHECK(approx_equal(kron(identity(2), identity(2)), identity(4), 0.0));
  CHECK(approx_equal(kron(pauli_z(), identity(2)), diag({1, 1, -1, -1}), 0.0));

  const ComplexMatrix xz = kron(pauli_x(), pauli_z());
  CHECK(xz.rows() == 4);
  CHECK(xz(0, 2) == Complex(1.0));
  CHECK(xz(1, 3) == Complex(-1.0));

  const ComplexMatrix rect = kron(ComplexMatrix::Ones(2, 3), ComplexMatrix::Ones(1, 2));
  CHECK(rect.rows() == 2);
  CHECK(rect.cols() == 6);
}

TEST_CASE("approx_equal uses an absolute tolerance") {
  ComplexMatrix a = identity(2);
  ComplexMatrix b = a;
  b(0, 1) = 1e-11;
  CHECK(approx_equal(a, b, 1e-10));
  CHECK_FALSE(approx_equal(a, b, 1e-12));
  CHECK_FALSE(approx_equal(a, identity(3), 1.0));
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix(identity(4) / 4.0, {2, 2}));
  CHECK_THROWS_AS(DensityMatrix(identity(4) / 4.0, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(identity(2), {2}), std::invalid_argument);  // trace 2
  CHECK_THROWS_AS(DensityMatrix(diag({1.5, -0.5}), {2}), std::invalid_argument);

  ComplexMatrix skew = identity(2) / 2.0;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(skew, {2}), std::invalid_argument);

  // Float-noise negativity inside the clamping window is accepted.
  CHECK_NOTHROW(DensityMatrix(diag({1.0 + 5e-11, -5e-11}), {2}));
}

TEST_CASE("PureState normalization") {
  CHECK_NOTHROW(PureState(bell(), {2, 2}));
  ComplexVector off = bell() * 1.001;
  CHECK_THROWS_AS(PureState(off, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PureState(bell(), {4, 2}), std::invalid_argument);
}

TEST_CASE("partial_trace") {
  std::mt19937_64 rng(7);

  SUBCASE("product state factorizes") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto ra = oracle::random_density(2, rng);
      const auto rb = oracle::random_density(2, rng);
      const DensityMatrix joint(kron(ra, rb), {2, 2});
      CHECK(approx_equal(partial_trace(joint, {0}).matrix(), ra, 1e-12));
      CHECK(approx_equal(partial_trace(joint, {1}).matrix(), rb, 1e-12));
    }
  }

  SUBCASE("Bell reduction is maximally mixed") {
    const DensityMatrix rho = PureState(bell(), {2, 2}).projector();
    CHECK(approx_equal(partial_trace(rho, {1}).matrix(), identity(2) / 2.0, 1e-15));
  }

  SUBCASE("random states keep unit trace") {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho(oracle::random_density(4, rng), {2, 2});
      for (std::size_t keep : {0u, 1u}) {
        const auto red = partial_trace(rho, {keep});
        CHECK(std::abs(red.matrix().trace() - Complex(1.0)) < 1e-12);
      }
    }
  }

  SUBCASE("agrees with explicit basis sandwiches") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = oracle::random_density(8, rng);
      const DensityMatrix rho(m, {2, 2, 2});
      // keep {A,B} = trace out E; keep {B,E} = trace out A.
      CHECK(approx_equal(partial_trace(rho, {0, 1}).matrix(), oracle::trace_out_second(m, 4, 2), 1e-13));
      CHECK(approx_equal(partial_trace(rho, {1, 2}).matrix(), oracle::trace_out_first(m, 2, 4), 1e-13));
      // Keep order does not matter and the result keeps tensor order.
      CHECK(approx_equal(partial_trace(rho, {2, 0}).matrix(), partial_trace(rho, {0, 2}).matrix(), 0.0));
      // Iterated traces agree with a single one.
      const auto ab = partial_trace(rho, {0, 1});
      CHECK(approx_equal(partial_trace(ab, {0}).matrix(), partial_trace(rho, {0}).matrix(), 1e-13));
    }
  }

  SUBCASE("unequal subsystem sizes") {
    const auto ra = oracle::random_density(2, rng);
    const auto rb = oracle::random_density(3, rng);
    const DensityMatrix joint(kron(ra, rb), {2, 3});
    CHECK(approx_equal(partial_trace(joint, {1}).matrix(), rb, 1e-12));
    CHECK(partial_trace(joint, {1}).dims() == Dims{3});
  }

  SUBCASE("rejects empty, full, duplicate and out-of-range keep sets") {
    const DensityMatrix rho(identity(8) / 8.0, {2, 2, 2});
    CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {3}), std::invalid_argument);
  }
}

TEST_CASE("hermitian_eigenvalues") {
  auto ev = hermitian_eigenvalues(diag({0.7, 0.3}));
  CHECK(ev(0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ev(1) == doctest::Approx(0.7).epsilon(1e-15));

  ev = hermitian_eigenvalues(pauli_x());
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(1) == doctest::Approx(1.0));

  // Bell state dephased to Λ = 0.5: the |00⟩,|11⟩ block is [[1/2, Λ/2],[Λ/2, 1/2]]
  // with roots (1 ± Λ)/2.
  ComplexMatrix dephased = ComplexMatrix::Zero(4, 4);
  dephased(0, 0) = dephased(3, 3) = 0.5;
  dephased(0, 3) = dephased(3, 0) = 0.25;
  ev = hermitian_eigenvalues(dephased);
  const double expected[] = {0.0, 0.0, 0.25, 0.75};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev(i) - expected[i]) < 1e-15);

  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Ones(2, 3)), std::invalid_argument);
  ComplexMatrix upper = identity(2);
  upper(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(upper), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues recovers U D U†") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<double> d(static_cast<std::size_t>(n));
    for (auto& x : d) x = unit(rng);
    std::sort(d.begin(), d.end());
    ComplexMatrix dm = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) dm(i, i) = d[static_cast<std::size_t>(i)];
    const auto u = oracle::random_unitary(n, rng);
    const auto ev = hermitian_eigenvalues(u * dm * u.adjoint());
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(ev(i) - d[static_cast<std::size_t>(i)]) < 1e-9);
      sum += ev(i);
    }
    double trace = 0.0;
    for (double x : d) trace += x;
    CHECK(std::abs(sum - trace) < 1e-9);
  }
}

TEST_CASE("von_neumann_entropy") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi(oracle::random_pure(4, rng), {2, 2});
    CHECK(std::abs(von_neumann_entropy(psi.projector())) < 1e-10);
  }
  CHECK(von_neumann_entropy(DensityMatrix(identity(4) / 4.0, {2, 2})) == doctest::Approx(2.0).epsilon(1e-14));
  // h(1/4) to 30 digits: 0.811278124459132863909695792039
  CHECK(std::abs(von_neumann_entropy(DensityMatrix(diag({0.75, 0.25}), {2})) - 0.8112781244591328) < 1e-15);
  CHECK(std::abs(oracle::h2(0.25) - 0.8112781244591328) < 1e-15);
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 ? 4 : 8;
    const auto m = oracle::random_density(n, rng);
    const auto u = oracle::random_unitary(n, rng);
    const Dims dims = n == 4 ? Dims{2, 2} : Dims{2, 2, 2};
    const double s = von_neumann_entropy(DensityMatrix(m, dims));
    const double s_rot = von_neumann_entropy(DensityMatrix(u * m * u.adjoint(), dims));
    CHECK(std::abs(s - s_rot) < 1e-9);
    CHECK(std::abs(s - oracle::entropy(m)) < 1e-9);
    CHECK(s >= 0.0);
    CHECK(s <= std::log2(n) + 1e-12);
  }
}

TEST_CASE("entropy_from_spectrum clamps float noise and rejects real negativity") {
  const double ok[] = {-5e-11, 0.5, 0.5};
  CHECK(entropy_from_spectrum(ok) == doctest::Approx(1.0));
  const double bad[] = {-1e-6, 0.5, 0.500001};
  CHECK_THROWS_AS(entropy_from_spectrum(bad), std::domain_error);
}

TEST_CASE("shannon_entropy") {
  const double certain[] = {1.0, 0.0};
  const double fair[] = {0.5, 0.5};
  const double biased[] = {0.25, 0.75};
  CHECK(shannon_entropy(certain) == 0.0);
  CHECK(shannon_entropy(fair) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(shannon_entropy(biased) - 0.8112781244591328) < 1e-15);

  const double noisy[] = {-1e-13, 1.0};
  CHECK(shannon_entropy(noisy) == 0.0);
  const double negative[] = {-1e-3, 1.001};
  CHECK_THROWS_AS(shannon_entropy(negative), std::invalid_argument);
  const double short_sum[] = {0.3, 0.3};
  CHECK_THROWS_AS(shannon_entropy(short_sum), std::invalid_argument);
}

TEST_CASE("Schmidt symmetry of tripartite pure states") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState psi(oracle::random_pure(8, rng), {2, 2, 2});
    const DensityMatrix rho = psi.projector();
    auto s = [&](std::vector<std::size_t> keep) { return von_neumann_entropy(partial_trace(rho, keep)); };
    CHECK(std::abs(s({0, 1}) - s({2})) < 1e-9);
    CHECK(std::abs(s({0, 2}) - s({1})) < 1e-9);
    CHECK(std::abs(s({1, 2}) - s({0})) < 1e-9);
  }
}
