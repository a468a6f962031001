#include <doctest.h>

#include "dqc/linalg.hpp"
#include "test_support.hpp"

using namespace dqc;
using dqc::testing::Rng;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("hermitian_eig: identity and diagonal") {
  auto eig = hermitian_eig(ComplexMatrix::Identity(2, 2));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(is_unitary(eig.eigenvectors, 1e-12));

  eig = hermitian_eig(diag2(0.0, 1.0));
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(std::abs(eig.eigenvectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(eig.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig: reconstruction and ordering on random input") {
  Rng rng(101);
  for (int rep = 0; rep < 25; ++rep) {
    const ComplexMatrix h = testing::random_hermitian(rng, 4);
    const auto eig = hermitian_eig(h);
    const ComplexMatrix back = eig.eigenvectors *
                               eig.eigenvalues.cast<Complex>().asDiagonal() *
                               eig.eigenvectors.adjoint();
    CHECK((back - h).norm() <= 1e-10);
    CHECK(is_unitary(eig.eigenvectors, 1e-10));
    for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i)
      CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i - 1]);
  }
}

TEST_CASE("hermitian_eig: rejects non-hermitian and non-square") {
  ComplexMatrix bad(2, 2);
  bad << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(hermitian_eig(bad), doctest::Contains("NotHermitian"), Error);
  CHECK_THROWS_WITH_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)),
                       doctest::Contains("NotSquare"), Error);
}

TEST_CASE("polar_decompose: identity, singular diagonal, scaled flip") {
  auto polar = polar_decompose(ComplexMatrix::Identity(3, 3));
  CHECK((polar.unitary - ComplexMatrix::Identity(3, 3)).norm() <= 1e-12);
  CHECK((polar.psd - ComplexMatrix::Identity(3, 3)).norm() <= 1e-12);

  // rank deficient: the completion rule must still give U = I
  polar = polar_decompose(diag2(1.0, 0.0));
  CHECK((polar.unitary - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((polar.psd - diag2(1.0, 0.0)).norm() <= 1e-12);

  ComplexMatrix half_x(2, 2);
  half_x << 0.0, 0.5, 0.5, 0.0;
  polar = polar_decompose(half_x);
  CHECK((polar.unitary * polar.psd - half_x).norm() <= 1e-12);
  ComplexMatrix pauli_x(2, 2);
  pauli_x << 0.0, 1.0, 1.0, 0.0;
  CHECK((polar.unitary - pauli_x).norm() <= 1e-10);
  CHECK((polar.psd - 0.5 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-10);
}

TEST_CASE("polar_decompose: A = UP with unitary U on random matrices") {
  Rng rng(102);
  for (int rep = 0; rep < 40; ++rep) {
    const Eigen::Index dim = 2 + rep % 5;
    ComplexMatrix a = testing::random_matrix(rng, dim, dim);
    if (rep % 3 == 0) a.col(0).setZero();  // rank-deficient draws
    const auto polar = polar_decompose(a);
    CHECK((polar.unitary * polar.psd - a).norm() <= 1e-10 * std::max(1.0, a.norm()));
    CHECK(is_unitary(polar.unitary, 1e-10));
    const auto eig = hermitian_eig(polar.psd);
    CHECK(eig.eigenvalues.minCoeff() >= -1e-12);
  }
}

TEST_CASE("matrix_sqrt_psd: fixed cases") {
  CHECK((matrix_sqrt_psd(ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(2, 2)).norm() <=
        1e-12);
  CHECK((matrix_sqrt_psd(diag2(4.0, 9.0)) - diag2(2.0, 3.0)).norm() <= 1e-12);
  CHECK_THROWS_WITH_AS(matrix_sqrt_psd(diag2(-1.0, 1.0)), doctest::Contains("NotPSD"), Error);
}

TEST_CASE("matrix_sqrt_psd: commutes with the source contraction") {
  Rng rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    const Eigen::Index dim = 2 + rep % 7;
    const ComplexMatrix h = testing::random_hermitian_contraction(rng, dim);
    const ComplexMatrix p = ComplexMatrix::Identity(dim, dim) - h * h;
    const ComplexMatrix s = matrix_sqrt_psd(p);
    CHECK((s * s - p).norm() <= 1e-10);
    CHECK((h * s - s * h).norm() <= 1e-10);
    CHECK(is_hermitian(s, 1e-10));
  }
}

TEST_CASE("operator_norm: fixed values and power-iteration oracle") {
  CHECK(operator_norm(ComplexMatrix::Identity(4, 4)) == doctest::Approx(1.0));
  CHECK(operator_norm(diag2(0.3, -0.8)) == doctest::Approx(0.8));
  CHECK_THROWS_WITH_AS(operator_norm(ComplexMatrix::Zero(2, 3)),
                       doctest::Contains("NotSquare"), Error);

  Rng rng(104);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index dim = 2 + rep % 6;
    const ComplexMatrix a = testing::random_matrix(rng, dim, dim);
    CHECK(std::abs(operator_norm(a) - testing::power_iteration_norm(a)) <= 1e-8);
  }
}

TEST_CASE("matrix_power matches naive multiplication") {
  Rng rng(105);
  const ComplexMatrix a = testing::random_contraction(rng, 4);
  for (int k = 0; k <= 9; ++k)
    CHECK((matrix_power(a, k) - testing::naive_matrix_power(a, k)).norm() <= 1e-12);
}

TEST_CASE("global phase canonicalization") {
  Rng rng(106);
  const ComplexVector v = testing::random_state(rng, 8);
  const Complex phase = std::polar(1.0, 1.234);
  CHECK(phase_distance(v, phase * v) <= 1e-12);
  CHECK(phase_distance(v, v) == doctest::Approx(0.0));

  // distinct states keep their distance
  const ComplexVector w = testing::random_state(rng, 8);
  CHECK(phase_distance(v, w) > 1e-3);
  CHECK_THROWS_WITH_AS(phase_distance(v, ComplexVector::Ones(4)),
                       doctest::Contains("DimensionMismatch"), Error);
}
