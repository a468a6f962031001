#include "dqc/linalg.hpp"

#include <cmath>
#include <string>

namespace dqc {

namespace {

std::string dim_string(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!is_square(a)) raise("NotSquare", std::string(what) + " must be square, got " + dim_string(a));
}

}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
  if (!is_power_of_two(n))
    raise("DimensionMismatch", "dimension " + std::to_string(n) + " is not a power of two");
  int k = 0;
  while ((Eigen::Index(1) << k) < n) ++k;
  return k;
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return is_square(a) && (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  return (a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols())).norm() <= tol;
}

bool is_contraction(const ComplexMatrix& a, double tol) {
  return is_square(a) && operator_norm(a) <= 1.0 + tol;
}

bool is_normalized(const ComplexVector& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

HermitianEig hermitian_eig(const ComplexMatrix& h, double tol) {
  require_square(h, "eigendecomposition input");
  const double dev = (h - h.adjoint()).norm();
  if (dev > tol)
    raise("NotHermitian", "||H - H^dag|| = " + std::to_string(dev) + " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) raise("NotHermitian", "eigensolver failed to converge");
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

SvdParts svd_deterministic(const ComplexMatrix& a) {
  require_square(a, "SVD input");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdParts parts{svd.matrixU(), svd.matrixV(), svd.singularValues()};

  // Phase-fix each left-singular vector so the factorization is unique even
  // when A is rank-deficient and the zero-singular-value subspace is free.
  constexpr double kEntryFloor = 1e-12;
  for (Eigen::Index k = 0; k < parts.left.cols(); ++k) {
    for (Eigen::Index i = 0; i < parts.left.rows(); ++i) {
      const double mag = std::abs(parts.left(i, k));
      if (mag > kEntryFloor) {
        const Complex phase = std::conj(parts.left(i, k)) / mag;
        parts.left.col(k) *= phase;
        parts.right.col(k) *= phase;
        break;
      }
    }
  }
  return parts;
}

PolarDecomposition polar_decompose(const ComplexMatrix& a) {
  SvdParts svd = svd_deterministic(a);
  ComplexMatrix u = svd.left * svd.right.adjoint();
  ComplexMatrix p = svd.right * svd.singular.asDiagonal() * svd.right.adjoint();
  p = ((p + p.adjoint()) / 2.0).eval();  // exact hermiticity for downstream checks
  return PolarDecomposition{std::move(u), std::move(p)};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& p, double tol) {
  HermitianEig eig = hermitian_eig(p, tol);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -tol)
      raise("NotPSD", "eigenvalue " + std::to_string(lambda) + " below -tolerance");
    roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  ComplexMatrix s = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  return ((s + s.adjoint()) / 2.0).eval();
}

double operator_norm(const ComplexMatrix& a) {
  require_square(a, "operator norm input");
  // sqrt of the top eigenvalue of A^dag A; the test suite carries an
  // independent power-iteration oracle for this quantity.
  ComplexMatrix gram = a.adjoint() * a;
  gram = ((gram + gram.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned k) {
  require_square(a, "matrix power input");
  ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = (result * base).eval();
    base = (base * base).eval();
    k >>= 1u;
  }
  return result;
}

ComplexVector fix_global_phase(const ComplexVector& v) {
  Eigen::Index best = -1;
  double best_mag = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best < 0 || best_mag == 0.0) return v;
  return v * (std::conj(v[best]) / best_mag);
}

double phase_distance(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size())
    raise("DimensionMismatch", "cannot compare vectors of sizes " + std::to_string(a.size()) +
                                   " and " + std::to_string(b.size()));
  return (fix_global_phase(a) - fix_global_phase(b)).norm();
}

}  // namespace dqc
