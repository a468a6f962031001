#pragma once

#include <vector>

#include "dqc/linalg.hpp"

namespace dqc {

/// A = (u0 + u1) / 2 with both factors unitary. Every contraction admits
/// such a split, so a weighted combination of contractions never needs
/// more than two unitaries per term.
struct TwoUnitaryDecomposition {
  ComplexMatrix u0;
  ComplexMatrix u1;
};

/// Wave divider/combiner pair acting on the first ancilla group. Column 0
/// of v (and row 0 of w) carries sqrt(c_i) for the normalized weights c_i.
struct DividerCombiner {
  ComplexMatrix v;              // divider, 2^m x 2^m
  ComplexMatrix w;              // combiner, v^dag
  std::vector<double> weights;  // normalized c_i, same length as the input
  double scale = 0.0;           // pre-normalization weight sum
};

/// One-ancilla unitary embedding of a contraction: the top-left block of
/// u equals b, so u(|0>|psi>) = |0>(b psi) + |1>(garbage).
struct Dilation {
  ComplexMatrix b;  // N x N contraction
  ComplexMatrix u;  // 2N x 2N unitary
};

struct ChebyshevWeights {
  std::vector<double> alphas;
  double alpha_sum = 0.0;
};

/// Split a contraction into the average of two unitaries,
/// u0/u1 = U(P +/- i(I - P^2)^{1/2}) from the deterministic polar
/// decomposition a = UP. Throws NotSquare / NotContraction.
TwoUnitaryDecomposition decompose_contraction(const ComplexMatrix& a,
                                              double tol = kDefaultTolerance);

/// Build the divider v (and combiner w = v^dag) for nonnegative weights.
/// Weights are zero-padded to 2^m and normalized internally; v is the
/// Householder reflection taking e0 to the sqrt-weight column (identity
/// when the column already is e0), so v00 >= 0 and v is real symmetric.
/// Throws AllZeroWeights / TooManyWeights / NegativeWeight.
DividerCombiner build_divider_combiner(const std::vector<double>& weights, int m,
                                       double tol = kDefaultTolerance);

/// Embed a contraction b in the unitary
///   [[b, -(I - b b^dag)^{1/2}], [(I - b^dag b)^{1/2}, b^dag]].
Dilation dilate_contraction(const ComplexMatrix& b, double tol = kDefaultTolerance);

/// Walk operator L = [[H, -(I - H^2)^{1/2}], [(I - H^2)^{1/2}, H]] for a
/// Hermitian contraction H. L^n has Chebyshev blocks: its top-left block
/// is T_n(H).
ComplexMatrix walk_operator(const ComplexMatrix& h, double tol = kDefaultTolerance);

/// Chebyshev polynomial of the first kind evaluated on a Hermitian
/// contraction via the three-term recurrence (T0 = I, T1 = H).
ComplexMatrix chebyshev_T(int n, const ComplexMatrix& h, double tol = kDefaultTolerance);

/// Second kind (U0 = I, U1 = 2H).
ComplexMatrix chebyshev_U(int n, const ComplexMatrix& h, double tol = kDefaultTolerance);

/// Expansion weights of H^{2 m0} over even Chebyshev polynomials:
/// alpha_i = 2^{1-2m0} (1/2)^{delta_{i0}} C(2m0, m0+i), truncated to the
/// first `terms` values. With terms = m0+1 the expansion is exact and the
/// weights sum to 1. Throws BadTruncation for terms outside [1, m0+1].
ChebyshevWeights chebyshev_weights(int m0, int terms);

/// Operator-norm error of the truncated even-Chebyshev expansion of
/// H^{2 m0}; zero (to roundoff) when terms = m0+1.
double power_approx_error(const ComplexMatrix& h, int m0, int terms,
                          double tol = kDefaultTolerance);

}  // namespace dqc
