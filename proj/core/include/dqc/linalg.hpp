#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dqc/error.hpp"

namespace dqc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for structural checks (hermiticity, unitarity,
/// normalization). Overridable per call and via the CLI's DQC_TOLERANCE.
inline constexpr double kDefaultTolerance = 1e-9;

bool is_power_of_two(Eigen::Index n);

/// log2 of a power-of-two dimension; throws DimensionMismatch otherwise.
int log2_exact(Eigen::Index n);

bool is_square(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_contraction(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_normalized(const ComplexVector& v, double tol = kDefaultTolerance);

struct HermitianEig {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix, H = Q diag(lambda) Q^dag.
/// Throws NotSquare / NotHermitian.
HermitianEig hermitian_eig(const ComplexMatrix& h, double tol = kDefaultTolerance);

struct PolarDecomposition {
  ComplexMatrix unitary;  // U
  ComplexMatrix psd;      // P = (A^dag A)^{1/2}
};

struct SvdParts {
  ComplexMatrix left;    // W
  ComplexMatrix right;   // V
  RealVector singular;   // descending, A = W diag(singular) V^dag
};

/// Full SVD with a deterministic phase convention: the first nonzero entry
/// of each left-singular vector is made real positive. Polar factors,
/// two-unitary splits and dilations are all derived from this one
/// factorization so their algebraic identities hold to rounding even at
/// the contraction boundary.
SvdParts svd_deterministic(const ComplexMatrix& a);

/// Polar decomposition A = U P via SVD, deterministic even for
/// rank-deficient A: the phase of each left-singular vector is fixed by
/// making its first nonzero entry real positive.
PolarDecomposition polar_decompose(const ComplexMatrix& a);

/// PSD square root of a Hermitian matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero (roundoff near a contraction boundary); anything below
/// -tol throws NotPSD.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& p, double tol = kDefaultTolerance);

/// Largest singular value of a square matrix.
double operator_norm(const ComplexMatrix& a);

/// A^k by repeated squaring (k >= 0).
ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned k);

/// Canonical global phase: the largest-magnitude amplitude is made real
/// positive (first index wins ties). Zero vectors are returned unchanged.
ComplexVector fix_global_phase(const ComplexVector& v);

/// Euclidean distance between two vectors after canonicalizing the global
/// phase of each.
double phase_distance(const ComplexVector& a, const ComplexVector& b);

}  // namespace dqc
