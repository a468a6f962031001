#include "dqc/gtc.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace dqc {

namespace {

RealVector checked_spectrum(const ComplexMatrix& h_tilde, double tol) {
  HermitianEig eig = hermitian_eig(h_tilde, tol);
  const double lo = eig.eigenvalues.minCoeff();
  const double hi = eig.eigenvalues.maxCoeff();
  if (lo < -tol || hi > 1.0 + tol)
    raise("SpectrumOutOfRange", "spectrum [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] not contained in [0, 1]");
  return eig.eigenvalues;
}

}  // namespace

ComplexMatrix shift_hamiltonian(const ComplexMatrix& h_tilde, double e_bound, double tol) {
  RealVector spectrum = checked_spectrum(h_tilde, tol);
  const double lambda0 = spectrum.minCoeff();
  if (e_bound < -tol || e_bound > lambda0 + tol)
    raise("BadLowerBound", "E = " + std::to_string(e_bound) + " outside [0, " +
                               std::to_string(lambda0) + "]");
  return (1.0 + e_bound) * ComplexMatrix::Identity(h_tilde.rows(), h_tilde.cols()) - h_tilde;
}

GroundStateProblem make_problem(ComplexMatrix h_tilde, double e_bound, StateVector trial,
                                double epsilon, double tol) {
  HermitianEig eig = hermitian_eig(h_tilde, tol);
  const Eigen::Index dim = h_tilde.rows();
  if (!is_power_of_two(dim) || dim < 2)
    raise("DimensionMismatch", "Hamiltonian dimension must be a power of two >= 2");
  checked_spectrum(h_tilde, tol);
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    raise("BadParameters", "epsilon must lie in (0, 1)");

  GroundStateProblem problem;
  problem.lambda0 = eig.eigenvalues[0];
  problem.gap = eig.eigenvalues[1] - eig.eigenvalues[0];
  if (problem.gap < tol)
    raise("DegenerateGroundState", "two lowest eigenvalues within " + std::to_string(tol));
  if (e_bound < -tol || e_bound > problem.lambda0 + tol)
    raise("BadLowerBound", "E = " + std::to_string(e_bound) + " outside [0, " +
                               std::to_string(problem.lambda0) + "]");
  problem.e_bound = std::max(0.0, e_bound);
  problem.delta_e = problem.lambda0 - problem.e_bound;

  if (trial.size() == 0)
    trial = StateVector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  if (trial.size() != dim)
    raise("DimensionMismatch", "trial state dimension does not match the Hamiltonian");
  if (!is_normalized(trial, tol))
    raise("UnnormalizedInput", "trial state norm is " + std::to_string(trial.norm()));

  problem.ground_state = fix_global_phase(eig.eigenvectors.col(0));
  problem.phi0 = std::abs(problem.ground_state.dot(trial));
  if (problem.phi0 < 1e-12)
    raise("BadTrialState", "trial state is orthogonal to the ground state");

  problem.h_tilde = std::move(h_tilde);
  problem.trial = std::move(trial);
  problem.epsilon = epsilon;
  return problem;
}

IterationCounts choose_iteration_counts(double gap, double phi0, double epsilon,
                                        const IterationConstants& constants) {
  if (!(gap > 0.0) || gap > 1.0) raise("BadParameters", "gap must lie in (0, 1]");
  if (!(phi0 > 0.0) || phi0 > 1.0) raise("BadParameters", "phi0 must lie in (0, 1]");
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) raise("BadParameters", "epsilon must lie in (0, 1)");

  const double raw = std::log(constants.power_log_numerator / (phi0 * epsilon)) / gap;
  IterationCounts counts;
  counts.power = 2 * std::max(1, static_cast<int>(std::ceil(raw / 2.0)));
  const int m0 = counts.power / 2;
  const double terms_raw =
      std::sqrt(2.0 * m0 * std::log(constants.terms_log_numerator / (phi0 * epsilon)));
  counts.terms = std::max(1, std::min(m0 + 1, static_cast<int>(std::ceil(terms_raw))));
  return counts;
}

GtcPlan build_gtc_program(const ComplexMatrix& h, int m0, int terms, double tol) {
  if (!is_hermitian(h, tol)) raise("NotHermitian", "shifted Hamiltonian");
  if (!is_contraction(h, tol)) raise("NotContraction", "shifted Hamiltonian");
  const Eigen::Index dim = h.rows();
  const int n = log2_exact(dim);

  GtcPlan plan;
  plan.h = h;
  plan.m0 = m0;
  plan.power = 2 * m0;
  plan.terms = terms;
  ChebyshevWeights weights = chebyshev_weights(m0, terms);
  plan.alphas = weights.alphas;
  plan.alpha_sum = weights.alpha_sum;

  int m = 0;
  while ((1 << m) < terms) ++m;

  LcuProgram program;
  program.layout = RegisterLayout{m, 1, n};
  program.weights = plan.alphas;
  program.divider_combiner = build_divider_combiner(plan.alphas, m, tol);

  // Even Chebyshev operators by recurrence, dilated by matching powers of
  // the walk operator (whose top-left block is exactly T_{2i}(H)).
  const ComplexMatrix walk = walk_operator(h, tol);
  const ComplexMatrix walk_sq = walk * walk;
  ComplexMatrix dilation = ComplexMatrix::Identity(2 * dim, 2 * dim);
  ComplexMatrix prev = ComplexMatrix::Identity(dim, dim);  // T_0
  ComplexMatrix cur = h;                                   // T_1
  for (int i = 0; i < terms; ++i) {
    if (i == 0) {
      program.operators.push_back(prev);
    } else {
      for (int k = 2 * (i - 1) + 1; k <= 2 * i; ++k) {
        ComplexMatrix next = 2.0 * (h * cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      dilation = (dilation * walk_sq).eval();
      program.operators.push_back(prev);  // T_{2i}
    }
    program.dilations.push_back(dilation);
    program.times.push_back(std::max(1.0, 2.0 * i));
    program.order.push_back(static_cast<std::size_t>(i));
  }

  plan.program = std::move(program);
  validate_program(plan.program, tol);
  return plan;
}

GroundStateResult prepare_ground_state(const GroundStateProblem& problem,
                                       const GtcOptions& options, double tol) {
  const ComplexMatrix shifted = shift_hamiltonian(problem.h_tilde, problem.e_bound, tol);

  int m0;
  int terms;
  if (options.m0_override) {
    m0 = *options.m0_override;
    terms = options.terms_override.value_or(m0 + 1);
  } else {
    IterationCounts counts = choose_iteration_counts(problem.gap, problem.phi0,
                                                     problem.epsilon, options.constants);
    m0 = counts.power / 2;
    terms = options.terms_override.value_or(counts.terms);
  }

  GroundStateResult result;
  result.plan = build_gtc_program(shifted, m0, terms, tol);
  result.trace = run_swp_exact(result.plan.program, problem.trial, tol);
  if (!result.trace.annihilated) {
    result.state = result.trace.final_state;
    result.fidelity = std::abs(problem.ground_state.dot(result.state));
  }
  return result;
}

std::vector<ConvergenceRow> verify_projector_convergence(const GroundStateProblem& problem,
                                                         const std::vector<int>& m0_range,
                                                         double tol) {
  if (m0_range.empty()) raise("BadParameters", "m0 range must be nonempty");
  const ComplexMatrix shifted = shift_hamiltonian(problem.h_tilde, problem.e_bound, tol);
  std::vector<ConvergenceRow> rows;
  rows.reserve(m0_range.size());
  for (int m0 : m0_range) {
    if (m0 < 0) raise("BadParameters", "m0 must be nonnegative");
    StateVector iterated = problem.trial;
    for (int k = 0; k < 2 * m0; ++k) iterated = shifted * iterated;
    const double norm = iterated.norm();
    if (norm < kProjectionFloor)
      raise("ZeroProbabilityProjection", "iterated state vanished at m0 = " + std::to_string(m0));
    iterated /= norm;
    ConvergenceRow row;
    row.m0 = m0;
    row.error = phase_distance(iterated, problem.ground_state);
    row.fidelity = std::abs(problem.ground_state.dot(iterated));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dqc
