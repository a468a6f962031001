#include "dqc/lcu.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace dqc {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_contraction(const ComplexMatrix& a, double tol, const char* what) {
  if (!is_square(a)) raise("NotSquare", std::string(what) + " must be square");
  const double norm = operator_norm(a);
  if (norm > 1.0 + tol)
    raise("NotContraction", std::string(what) + " has operator norm " + std::to_string(norm));
}

void require_hermitian(const ComplexMatrix& h, double tol, const char* what) {
  if (!is_square(h)) raise("NotSquare", std::string(what) + " must be square");
  if (!is_hermitian(h, tol)) raise("NotHermitian", std::string(what) + " is not Hermitian");
}

// C(n, k) exactly; every intermediate stays integral. Valid for n <= 66.
double binomial_exact(int n, int k) {
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j)
    r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * (n - k + j)) / j);
  return static_cast<double>(r);
}

}  // namespace

// sqrt(1 - x^2) with boundary roundoff snapped to zero, so exactly-unitary
// inputs produce exactly-vanishing off-diagonal blocks.
constexpr double kBoundarySnap = 1e-13;

static double complement_root(double x) {
  const double complement = 1.0 - x * x;
  return complement <= kBoundarySnap ? 0.0 : std::sqrt(complement);
}

static RealVector complement_roots(const RealVector& singular) {
  RealVector roots(singular.size());
  for (Eigen::Index i = 0; i < singular.size(); ++i) roots[i] = complement_root(singular[i]);
  return roots;
}

TwoUnitaryDecomposition decompose_contraction(const ComplexMatrix& a, double tol) {
  require_contraction(a, tol, "contraction to decompose");
  // U(P +/- i sqrt(I - P^2)) collapses to W diag(sigma +/- i sqrt(1-sigma^2)) V^dag
  // on the shared SVD; the diagonal phases have unit modulus exactly, so both
  // factors stay unitary to rounding even for boundary-norm inputs.
  SvdParts svd = svd_deterministic(a);
  const RealVector roots = complement_roots(svd.singular);
  ComplexVector plus(svd.singular.size()), minus(svd.singular.size());
  for (Eigen::Index i = 0; i < svd.singular.size(); ++i) {
    plus[i] = Complex(svd.singular[i], roots[i]);
    minus[i] = Complex(svd.singular[i], -roots[i]);
  }
  return TwoUnitaryDecomposition{svd.left * plus.asDiagonal() * svd.right.adjoint(),
                                 svd.left * minus.asDiagonal() * svd.right.adjoint()};
}

DividerCombiner build_divider_combiner(const std::vector<double>& weights, int m, double tol) {
  const Eigen::Index slits = Eigen::Index(1) << m;
  if (weights.empty() || static_cast<Eigen::Index>(weights.size()) > slits)
    raise("TooManyWeights", std::to_string(weights.size()) + " weights do not fit " +
                                std::to_string(slits) + " slits");
  double sum = 0.0;
  for (double c : weights) {
    if (c < 0.0) raise("NegativeWeight", "weight " + std::to_string(c));
    sum += c;
  }
  if (sum <= 0.0) raise("AllZeroWeights", "at least one weight must be positive");

  DividerCombiner out;
  out.scale = sum;
  out.weights.reserve(weights.size());
  for (double c : weights) out.weights.push_back(c / sum);

  Eigen::VectorXd column = Eigen::VectorXd::Zero(slits);
  for (std::size_t i = 0; i < out.weights.size(); ++i)
    column[static_cast<Eigen::Index>(i)] = std::sqrt(out.weights[i]);

  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(slits, slits);
  if (1.0 - column[0] > tol) {
    // Householder reflection mapping e0 to the sqrt-weight column.
    Eigen::VectorXd u = column;
    u[0] -= 1.0;
    v -= (u * u.transpose()) / (1.0 - column[0]);
  }
  out.v = v.cast<Complex>();
  out.w = out.v.adjoint();
  return out;
}

Dilation dilate_contraction(const ComplexMatrix& b, double tol) {
  require_contraction(b, tol, "contraction to dilate");
  const Eigen::Index n = b.rows();
  // Both off-diagonal roots come from the one SVD of b, so the cross terms
  // b^dag (I - b b^dag)^{1/2} and (I - b^dag b)^{1/2} b^dag cancel to
  // rounding instead of to the sqrt of it.
  SvdParts svd = svd_deterministic(b);
  const RealVector roots = complement_roots(svd.singular);
  ComplexMatrix upper_root = svd.left * roots.asDiagonal() * svd.left.adjoint();
  ComplexMatrix lower_root = svd.right * roots.asDiagonal() * svd.right.adjoint();
  ComplexMatrix u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = b;
  u.topRightCorner(n, n) = -upper_root;
  u.bottomLeftCorner(n, n) = lower_root;
  u.bottomRightCorner(n, n) = b.adjoint();
  return Dilation{b, std::move(u)};
}

ComplexMatrix walk_operator(const ComplexMatrix& h, double tol) {
  require_hermitian(h, tol, "walk operator input");
  const Eigen::Index n = h.rows();
  HermitianEig eig = hermitian_eig(h, tol);
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues[i];
    if (std::abs(lambda) > 1.0 + tol)
      raise("NotContraction", "walk operator input has eigenvalue " + std::to_string(lambda));
    roots[i] = complement_root(lambda);
  }
  ComplexMatrix root = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  ComplexMatrix l(2 * n, 2 * n);
  l.topLeftCorner(n, n) = h;
  l.topRightCorner(n, n) = -root;
  l.bottomLeftCorner(n, n) = root;
  l.bottomRightCorner(n, n) = h;
  return l;
}

namespace {

ComplexMatrix chebyshev_recurrence(int n, const ComplexMatrix& h, const ComplexMatrix& first) {
  const Eigen::Index dim = h.rows();
  if (n == 0) return ComplexMatrix::Identity(dim, dim);
  ComplexMatrix prev = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix cur = first;
  for (int k = 1; k < n; ++k) {
    ComplexMatrix next = 2.0 * (h * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ComplexMatrix chebyshev_T(int n, const ComplexMatrix& h, double tol) {
  if (n < 0) raise("BadParameters", "Chebyshev degree must be nonnegative");
  require_hermitian(h, tol, "Chebyshev argument");
  require_contraction(h, tol, "Chebyshev argument");
  return chebyshev_recurrence(n, h, h);
}

ComplexMatrix chebyshev_U(int n, const ComplexMatrix& h, double tol) {
  if (n < 0) raise("BadParameters", "Chebyshev degree must be nonnegative");
  require_hermitian(h, tol, "Chebyshev argument");
  require_contraction(h, tol, "Chebyshev argument");
  return chebyshev_recurrence(n, h, 2.0 * h);
}

ChebyshevWeights chebyshev_weights(int m0, int terms) {
  if (m0 < 1) raise("BadParameters", "m0 must be >= 1");
  if (terms < 1 || terms > m0 + 1)
    raise("BadTruncation", "terms = " + std::to_string(terms) + " outside [1, " +
                               std::to_string(m0 + 1) + "]");
  ChebyshevWeights out;
  out.alphas.resize(terms);
  if (m0 <= 33) {
    for (int i = 0; i < terms; ++i)
      out.alphas[i] = std::ldexp(binomial_exact(2 * m0, m0 + i), 1 - 2 * m0);
  } else {
    // log-space start to avoid overflowing the binomial, then the exact
    // neighbour ratio C(2m0, m0+i) / C(2m0, m0+i-1) = (m0-i+1)/(m0+i)
    double beta = std::exp(std::lgamma(2.0 * m0 + 1.0) - 2.0 * std::lgamma(m0 + 1.0) +
                           (1.0 - 2.0 * m0) * std::log(2.0));
    for (int i = 0; i < terms; ++i) {
      out.alphas[i] = beta;
      beta *= static_cast<double>(m0 - i) / static_cast<double>(m0 + i + 1);
    }
  }
  out.alphas[0] *= 0.5;
  for (double a : out.alphas) out.alpha_sum += a;
  return out;
}

double power_approx_error(const ComplexMatrix& h, int m0, int terms, double tol) {
  require_hermitian(h, tol, "power approximation input");
  require_contraction(h, tol, "power approximation input");
  ChebyshevWeights weights = chebyshev_weights(m0, terms);
  const Eigen::Index dim = h.rows();

  ComplexMatrix approx = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix prev = ComplexMatrix::Identity(dim, dim);  // T_0
  ComplexMatrix cur = h;                                   // T_1
  approx += weights.alphas[0] * prev;
  for (int k = 2; k <= 2 * (terms - 1); ++k) {
    ComplexMatrix next = 2.0 * (h * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && k / 2 < terms) approx += weights.alphas[k / 2] * cur;
  }

  ComplexMatrix target = matrix_power(h, static_cast<unsigned>(2 * m0));
  return operator_norm(target - approx);
}

}  // namespace dqc
