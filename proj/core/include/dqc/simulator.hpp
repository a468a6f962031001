#pragma once

#include <cstdint>
#include <vector>

#include "dqc/lcu.hpp"
#include "dqc/linalg.hpp"

namespace dqc {

/// Probability below which a projection target is considered annihilated.
inline constexpr double kProjectionFloor = 1e-14;

/// Qubit register split [first ancilla group | second ancilla group | work],
/// with the first group as the most significant index block.
struct RegisterLayout {
  int m = 0;  // first-group (slit) qubits
  int p = 0;  // second-group (dilation) qubits
  int n = 0;  // work qubits

  Eigen::Index slit_count() const { return Eigen::Index(1) << m; }
  Eigen::Index block_dim() const { return Eigen::Index(1) << (p + n); }
  Eigen::Index work_dim() const { return Eigen::Index(1) << n; }
  Eigen::Index total_dim() const { return Eigen::Index(1) << (m + p + n); }
  int total_qubits() const { return m + p + n; }
};

/// A weighted combination of contractions B_i together with everything
/// needed to run it: unitary dilations U_i, divider/combiner, per-gate
/// times, and the gate application order.
struct LcuProgram {
  RegisterLayout layout;
  std::vector<double> weights;             // raw nonnegative inputs, size M
  std::vector<ComplexMatrix> operators;    // B_i, N x N contractions
  std::vector<ComplexMatrix> dilations;    // U_i, unitary, 2^p * N square
  DividerCombiner divider_combiner;
  std::vector<double> times;               // positive, abstract units
  std::vector<std::size_t> order;          // permutation of 0..M-1

  std::size_t term_count() const { return operators.size(); }
  /// Normalized coefficient c_i of term i.
  double coefficient(std::size_t i) const { return divider_combiner.weights[i]; }
  /// A = sum_i c_i B_i assembled densely.
  ComplexMatrix combined_operator() const;
};

/// Build a program from raw weights and contractions. Dilations are
/// constructed internally: p = 0 requires every operator to be unitary and
/// uses it directly; p = 1 uses the one-ancilla dilation. Empty times
/// default to 1, empty order to 0..M-1.
LcuProgram make_program(int m, int p, std::vector<double> weights,
                        std::vector<ComplexMatrix> operators,
                        std::vector<double> times = {},
                        std::vector<std::size_t> order = {},
                        double tol = kDefaultTolerance);

/// Full structural validation; throws the named domain error of the first
/// violated invariant.
void validate_program(const LcuProgram& program, double tol = kDefaultTolerance);

/// Survival probabilities b_i = <psi| B_i^dag B_i |psi>.
std::vector<double> survival_probs(const LcuProgram& program, const StateVector& psi);

/// Record of one exact or sampled execution.
struct RunTrace {
  std::vector<double> step_probabilities;  // p_0..p_M (final projection last)
  std::vector<bool> outcomes;              // per-step success flags
  std::size_t restarts = 0;
  double elapsed_time = 0.0;               // sum of gate times over all attempts
  StateVector final_state;                 // work register, normalized
  double overall_probability = 0.0;
  bool annihilated = false;                // a projection target had ~zero weight
  std::size_t annihilated_step = 0;
};

StateVector init_register(const RegisterLayout& layout, const StateVector& psi,
                          double tol = kDefaultTolerance);

/// Apply a unitary to the first-group index; the block size is inferred
/// from the state and matrix dimensions.
StateVector apply_first_group(const StateVector& state, const ComplexMatrix& u,
                              double tol = kDefaultTolerance);

/// Multiply slit block `slit` by a unitary on (second group x work); all
/// other blocks are untouched.
StateVector apply_controlled(const StateVector& state, std::size_t slit,
                             const ComplexMatrix& u_dilated, double tol = kDefaultTolerance);

struct Projection {
  double probability = 0.0;
  StateVector projected;
};

/// Project the second ancilla group onto all-zeros; returns the outcome
/// probability and the renormalized post-measurement state. Throws
/// ZeroProbabilityProjection when the slice weight is below the floor.
Projection project_second_group(const StateVector& state, const RegisterLayout& layout);

/// Same for the first group.
Projection project_first_group(const StateVector& state, const RegisterLayout& layout);

/// Deterministic conditioning run: divider, then for each gate in order a
/// controlled dilation followed by a second-group projection, then the
/// combiner and the first-group projection. Every step probability is
/// recorded; the product equals <psi|A^dag A|psi>. A zero-probability
/// projection is flagged on the trace instead of thrown.
RunTrace run_swp_exact(const LcuProgram& program, const StateVector& psi,
                       double tol = kDefaultTolerance);

/// Same pipeline without intermediate projections: one combined projection
/// (both ancilla groups zero) at the end.
RunTrace run_final_projection(const LcuProgram& program, const StateVector& psi,
                              double tol = kDefaultTolerance);

struct StepStats {
  std::size_t reached = 0;
  std::size_t succeeded = 0;
  double empirical_p() const {
    return reached == 0 ? 0.0 : static_cast<double>(succeeded) / static_cast<double>(reached);
  }
};

struct MonteCarloSummary {
  std::size_t trials = 0;
  double mean_restarts = 0.0;
  double mean_attempts = 0.0;
  double mean_elapsed = 0.0;
  double attempts_stddev = 0.0;  // sample standard deviation
  double elapsed_stddev = 0.0;
  std::vector<StepStats> steps;  // M gate steps + final projection
};

/// Sampled restart process: each trial draws every projection outcome at
/// its exact probability and restarts from the divider on failure,
/// accumulating the gate time spent. Trial streams are derived from
/// (seed, trial index), so results do not depend on execution order.
/// Throws ZeroProbabilityProjection if a projection can never succeed.
MonteCarloSummary run_swp_montecarlo(const LcuProgram& program, const StateVector& psi,
                                     std::uint64_t seed, std::size_t trials,
                                     double tol = kDefaultTolerance);

}  // namespace dqc
