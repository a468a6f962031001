#include <doctest.h>

#include "dqc/lcu.hpp"
#include "test_support.hpp"

using namespace dqc;
using dqc::testing::Rng;

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

}  // namespace

TEST_CASE("decompose_contraction: identity gives trivial factors") {
  const auto d = decompose_contraction(ComplexMatrix::Identity(2, 2));
  CHECK((d.u0 - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((d.u1 - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
}

TEST_CASE("decompose_contraction: singular projector diag(1,0)") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  const auto d = decompose_contraction(a);
  ComplexMatrix u0(2, 2), u1(2, 2);
  u0 << 1.0, 0.0, 0.0, kI;
  u1 << 1.0, 0.0, 0.0, -kI;
  CHECK((d.u0 - u0).norm() <= 1e-10);
  CHECK((d.u1 - u1).norm() <= 1e-10);
  CHECK((a - 0.5 * (d.u0 + d.u1)).norm() <= 1e-12);
  CHECK(is_unitary(d.u0, 1e-12));
  CHECK(is_unitary(d.u1, 1e-12));
}

TEST_CASE("decompose_contraction: half Pauli X") {
  const auto d = decompose_contraction(0.5 * pauli_x());
  const double root3_2 = std::sqrt(3.0) / 2.0;
  CHECK((d.u0 - (0.5 + kI * root3_2) * pauli_x()).norm() <= 1e-10);
  CHECK((d.u1 - (0.5 - kI * root3_2) * pauli_x()).norm() <= 1e-10);
  CHECK((0.5 * pauli_x() - 0.5 * (d.u0 + d.u1)).norm() <= 1e-12);
  CHECK(is_unitary(d.u0, 1e-12));
  CHECK(is_unitary(d.u1, 1e-12));
}

TEST_CASE("decompose_contraction: average of two unitaries on random contractions") {
  Rng rng(201);
  for (int rep = 0; rep < 60; ++rep) {
    const Eigen::Index dim = 2 + rep % 15;
    const ComplexMatrix a = testing::random_contraction(rng, dim);
    const auto d = decompose_contraction(a);
    CHECK((a - 0.5 * (d.u0 + d.u1)).norm() <= 1e-10);
    CHECK(is_unitary(d.u0, 1e-10));
    CHECK(is_unitary(d.u1, 1e-10));
  }
}

TEST_CASE("decompose_contraction: rejects expansions") {
  CHECK_THROWS_WITH_AS(decompose_contraction(1.5 * ComplexMatrix::Identity(2, 2)),
                       doctest::Contains("NotContraction"), Error);
}

TEST_CASE("build_divider_combiner: single slit") {
  const auto dc = build_divider_combiner({1.0}, 0);
  CHECK(dc.v.rows() == 1);
  CHECK(std::abs(dc.v(0, 0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(dc.scale == doctest::Approx(1.0));
}

TEST_CASE("build_divider_combiner: balanced pair") {
  const auto dc = build_divider_combiner({0.5, 0.5}, 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(dc.v(0, 0) - Complex(r, 0.0)) <= 1e-12);
  CHECK(std::abs(dc.v(1, 0) - Complex(r, 0.0)) <= 1e-12);
  CHECK(is_unitary(dc.v, 1e-12));
  CHECK(is_unitary(dc.w, 1e-12));
}

TEST_CASE("build_divider_combiner: chebyshev weights of m0=2 on four slits") {
  const auto dc = build_divider_combiner({3.0 / 8.0, 0.5, 1.0 / 8.0}, 2);
  CHECK(dc.scale == doctest::Approx(1.0));
  CHECK(std::abs(dc.v(0, 0) - Complex(std::sqrt(3.0 / 8.0), 0.0)) <= 1e-12);
  CHECK(std::abs(dc.v(1, 0) - Complex(std::sqrt(0.5), 0.0)) <= 1e-12);
  CHECK(std::abs(dc.v(2, 0) - Complex(std::sqrt(1.0 / 8.0), 0.0)) <= 1e-12);
  CHECK(std::abs(dc.v(3, 0)) <= 1e-12);
  CHECK(is_unitary(dc.v, 1e-12));
}

TEST_CASE("build_divider_combiner: errors and properties") {
  CHECK_THROWS_WITH_AS(build_divider_combiner({0.0, 0.0}, 1),
                       doctest::Contains("AllZeroWeights"), Error);
  CHECK_THROWS_WITH_AS(build_divider_combiner({1.0, 1.0, 1.0}, 1),
                       doctest::Contains("TooManyWeights"), Error);
  CHECK_THROWS_WITH_AS(build_divider_combiner({0.5, -0.1}, 1),
                       doctest::Contains("NegativeWeight"), Error);

  Rng rng(202);
  std::uniform_real_distribution<double> weight(0.0, 3.0);
  for (int rep = 0; rep < 25; ++rep) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % (std::size_t(1) << m));
    std::vector<double> weights(count);
    double sum = 0.0;
    for (double& c : weights) sum += (c = weight(rng));
    if (sum == 0.0) weights[0] = 1.0;
    const auto dc = build_divider_combiner(weights, m);
    CHECK(is_unitary(dc.v, 1e-12));
    CHECK((dc.w - dc.v.adjoint()).norm() <= 1e-15);
    for (int i = 0; i < count; ++i) {
      CHECK(std::abs(dc.v(i, 0) - Complex(std::sqrt(dc.weights[i]), 0.0)) <= 1e-12);
      CHECK(std::abs(dc.w(0, i) - Complex(std::sqrt(dc.weights[i]), 0.0)) <= 1e-12);
    }
    CHECK(dc.v(0, 0).real() >= 0.0);
  }
}

TEST_CASE("dilate_contraction: unitary input keeps the ancilla clean") {
  Rng rng(203);
  const ComplexMatrix u = testing::random_unitary(rng, 4);
  const auto d = dilate_contraction(u);
  CHECK(d.u.topRightCorner(4, 4).norm() <= 1e-10);
  CHECK(d.u.bottomLeftCorner(4, 4).norm() <= 1e-10);
  CHECK(is_unitary(d.u, 1e-10));
}

TEST_CASE("dilate_contraction: zero operator flips the ancilla") {
  const auto d = dilate_contraction(ComplexMatrix::Zero(2, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.topRightCorner(2, 2) = -ComplexMatrix::Identity(2, 2);
  expected.bottomLeftCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  CHECK((d.u - expected).norm() <= 1e-12);
}

TEST_CASE("dilate_contraction: scaled identity splits amplitude") {
  const auto d = dilate_contraction(0.5 * ComplexMatrix::Identity(2, 2));
  ComplexVector psi(2);
  psi << 1.0, 0.0;
  ComplexVector reg = ComplexVector::Zero(4);
  reg.head(2) = psi;
  const ComplexVector out = d.u * reg;
  CHECK(out.head(2).squaredNorm() == doctest::Approx(0.25));
  CHECK((out.head(2) - 0.5 * psi).norm() <= 1e-12);
  CHECK(out.tail(2).squaredNorm() == doctest::Approx(0.75));
}

TEST_CASE("dilate_contraction: top block acts as the contraction") {
  Rng rng(204);
  for (int rep = 0; rep < 30; ++rep) {
    const Eigen::Index dim = 2 + rep % 6;
    const ComplexMatrix b = testing::random_contraction(rng, dim);
    const StateVector psi = testing::random_state(rng, dim);
    const auto d = dilate_contraction(b);
    CHECK(is_unitary(d.u, 1e-10));
    CHECK((d.u.topLeftCorner(dim, dim) - b).norm() <= 1e-14);
    ComplexVector reg = ComplexVector::Zero(2 * dim);
    reg.head(dim) = psi;
    const ComplexVector out = d.u * reg;
    CHECK((out.head(dim) - b * psi).norm() <= 1e-12);
  }
}

TEST_CASE("walk_operator: fixed cases") {
  CHECK((walk_operator(ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(4, 4)).norm() <=
        1e-12);

  const ComplexMatrix l0 = walk_operator(ComplexMatrix::Zero(2, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.topRightCorner(2, 2) = -ComplexMatrix::Identity(2, 2);
  expected.bottomLeftCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  CHECK((l0 - expected).norm() <= 1e-12);

  const ComplexMatrix l = walk_operator(0.5 * ComplexMatrix::Identity(2, 2));
  const double root3_2 = std::sqrt(3.0) / 2.0;
  CHECK((l.topLeftCorner(2, 2) - 0.5 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((l.topRightCorner(2, 2) + root3_2 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((l.bottomLeftCorner(2, 2) - root3_2 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK(is_unitary(l, 1e-12));

  CHECK_THROWS_WITH_AS(walk_operator(ComplexMatrix::Zero(2, 3)),
                       doctest::Contains("NotSquare"), Error);
  ComplexMatrix skew(2, 2);
  skew << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(walk_operator(skew), doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("walk_operator: unitary with Chebyshev first-kind blocks") {
  Rng rng(205);
  for (int rep = 0; rep < 12; ++rep) {
    const Eigen::Index dim = 2 + rep % 4;
    const ComplexMatrix h = testing::random_hermitian_contraction(rng, dim);
    const ComplexMatrix l = walk_operator(h);
    CHECK((l.adjoint() * l - ComplexMatrix::Identity(2 * dim, 2 * dim)).norm() <= 1e-10);
    for (int n = 0; n <= 8; ++n) {
      const ComplexMatrix ln = testing::naive_matrix_power(l, n);
      CHECK((ln.topLeftCorner(dim, dim) - chebyshev_T(n, h)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("walk_operator: second-kind blocks on interior contractions") {
  // (I - H^2)^{1/2} is ill-conditioned at the norm boundary, where any two
  // evaluation routes disagree at sqrt(machine) scale; the cross-route
  // block comparison therefore uses strictly interior spectra.
  Rng rng(209);
  for (int rep = 0; rep < 12; ++rep) {
    const Eigen::Index dim = 2 + rep % 4;
    const ComplexMatrix h = 0.95 * testing::random_hermitian_contraction(rng, dim);
    const ComplexMatrix l = walk_operator(h);
    const ComplexMatrix root = matrix_sqrt_psd(ComplexMatrix::Identity(dim, dim) - h * h);
    for (int n = 1; n <= 8; ++n) {
      const ComplexMatrix ln = testing::naive_matrix_power(l, n);
      CHECK((ln.topLeftCorner(dim, dim) - chebyshev_T(n, h)).norm() <= 1e-9);
      CHECK((ln.bottomLeftCorner(dim, dim) - root * chebyshev_U(n - 1, h)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("chebyshev_T/U: base cases and scalar identities") {
  Rng rng(206);
  const ComplexMatrix h = testing::random_hermitian_contraction(rng, 4);
  CHECK((chebyshev_T(0, h) - ComplexMatrix::Identity(4, 4)).norm() == doctest::Approx(0.0));
  CHECK((chebyshev_T(1, h) - h).norm() == doctest::Approx(0.0));
  CHECK((chebyshev_U(1, h) - 2.0 * h).norm() == doctest::Approx(0.0));

  const ComplexMatrix t2 = chebyshev_T(2, 0.5 * ComplexMatrix::Identity(2, 2));
  CHECK((t2 + 0.5 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-14);

  // spectral oracle: T_n(cos theta) = cos(n theta) on the eigenvalues
  const auto eig = hermitian_eig(h);
  for (int n = 0; n <= 6; ++n) {
    const ComplexMatrix tn = chebyshev_T(n, h);
    const ComplexMatrix diag = eig.eigenvectors.adjoint() * tn * eig.eigenvectors;
    for (Eigen::Index i = 0; i < 4; ++i) {
      const double theta = std::acos(std::clamp(eig.eigenvalues[i], -1.0, 1.0));
      CHECK(std::abs(diag(i, i).real() - std::cos(n * theta)) <= 1e-9);
    }
  }
}

TEST_CASE("chebyshev_weights: fixed values and the exact-expansion sum") {
  auto w = chebyshev_weights(1, 2);
  REQUIRE(w.alphas.size() == 2);
  CHECK(w.alphas[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.alphas[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.alpha_sum == doctest::Approx(1.0).epsilon(1e-12));

  w = chebyshev_weights(2, 3);
  CHECK(w.alphas[0] == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(w.alphas[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.alphas[2] == doctest::Approx(1.0 / 8.0).epsilon(1e-12));

  for (int m0 = 1; m0 <= 8; ++m0)
    CHECK(chebyshev_weights(m0, m0 + 1).alpha_sum == doctest::Approx(1.0).epsilon(1e-12));

  // the log-space branch must agree with the exact one where both apply
  for (int m0 : {34, 40, 60}) {
    const auto big = chebyshev_weights(m0, m0 + 1);
    CHECK(big.alpha_sum == doctest::Approx(1.0).epsilon(1e-10));
  }

  CHECK_THROWS_WITH_AS(chebyshev_weights(2, 4), doctest::Contains("BadTruncation"), Error);
  CHECK_THROWS_WITH_AS(chebyshev_weights(2, 0), doctest::Contains("BadTruncation"), Error);
}

TEST_CASE("chebyshev_weights: exact even expansion of matrix powers") {
  Rng rng(207);
  for (int m0 = 1; m0 <= 6; ++m0) {
    const ComplexMatrix h = testing::random_hermitian_contraction(rng, 4);
    const auto w = chebyshev_weights(m0, m0 + 1);
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i <= m0; ++i) sum += w.alphas[i] * chebyshev_T(2 * i, h);
    CHECK((sum - testing::naive_matrix_power(h, 2 * m0)).norm() <= 1e-10);
  }
}

TEST_CASE("power_approx_error: exactness, spectrum oracle, monotonicity") {
  Rng rng(208);
  const ComplexMatrix h = testing::random_hermitian_contraction(rng, 4);
  for (int m0 = 1; m0 <= 6; ++m0) CHECK(power_approx_error(h, m0, m0 + 1) <= 1e-10);
  CHECK_THROWS_WITH_AS(chebyshev_T(2, 1.5 * ComplexMatrix::Identity(2, 2)),
                       doctest::Contains("NotContraction"), Error);

  // diag(1, 0): truncating the m0=2 expansion at two terms leaves alpha_2 T_4,
  // which evaluates to 1/8 at both eigenvalues
  ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  CHECK(power_approx_error(proj, 2, 2) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));

  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix g = testing::random_hermitian_contraction(rng, 4);
    double prev = std::numeric_limits<double>::infinity();
    for (int terms = 1; terms <= 5; ++terms) {
      const double err = power_approx_error(g, 4, terms);
      CHECK(err <= prev + 1e-12);
      prev = err;
    }
  }
}
