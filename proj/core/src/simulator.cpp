#include "dqc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace dqc {

namespace {

void require_layout(const RegisterLayout& layout) {
  if (layout.m < 0 || layout.p < 0 || layout.n < 0)
    raise("BadParameters", "register layout counts must be nonnegative");
  if (layout.total_qubits() > 30) raise("BadParameters", "register too large to simulate");
}

void require_state(const StateVector& state, Eigen::Index dim, double tol) {
  if (state.size() != dim)
    raise("DimensionMismatch", "state has dimension " + std::to_string(state.size()) +
                                   ", expected " + std::to_string(dim));
  if (!is_normalized(state, tol))
    raise("UnnormalizedInput", "state norm is " + std::to_string(state.norm()));
}

StateVector apply_first_group_unchecked(const StateVector& state, const ComplexMatrix& u) {
  const Eigen::Index slits = u.rows();
  const Eigen::Index block = state.size() / slits;
  Eigen::Map<const ComplexMatrix> blocks(state.data(), block, slits);
  StateVector out(state.size());
  Eigen::Map<ComplexMatrix>(out.data(), block, slits) = blocks * u.transpose();
  return out;
}

StateVector apply_controlled_unchecked(const StateVector& state, std::size_t slit,
                                       const ComplexMatrix& u) {
  const Eigen::Index block = u.rows();
  StateVector out = state;
  out.segment(static_cast<Eigen::Index>(slit) * block, block) =
      u * state.segment(static_cast<Eigen::Index>(slit) * block, block);
  return out;
}

// Squared weight of the second-group all-zeros slice, as a fraction of the
// total squared norm (robust to accumulated roundoff in the state norm).
double second_group_zero_weight(const StateVector& state, const RegisterLayout& layout,
                                double* kept_out) {
  const Eigen::Index block = layout.block_dim();
  const Eigen::Index work = layout.work_dim();
  double kept = 0.0;
  for (Eigen::Index i = 0; i < layout.slit_count(); ++i)
    kept += state.segment(i * block, work).squaredNorm();
  if (kept_out) *kept_out = kept;
  return kept / state.squaredNorm();
}

StateVector condition_second_group(const StateVector& state, const RegisterLayout& layout,
                                   double kept) {
  const Eigen::Index block = layout.block_dim();
  const Eigen::Index work = layout.work_dim();
  StateVector out = StateVector::Zero(state.size());
  const double inv = 1.0 / std::sqrt(kept);
  for (Eigen::Index i = 0; i < layout.slit_count(); ++i)
    out.segment(i * block, work) = state.segment(i * block, work) * inv;
  return out;
}

}  // namespace

ComplexMatrix LcuProgram::combined_operator() const {
  ComplexMatrix a = ComplexMatrix::Zero(operators[0].rows(), operators[0].cols());
  for (std::size_t i = 0; i < operators.size(); ++i) a += coefficient(i) * operators[i];
  return a;
}

LcuProgram make_program(int m, int p, std::vector<double> weights,
                        std::vector<ComplexMatrix> operators, std::vector<double> times,
                        std::vector<std::size_t> order, double tol) {
  const std::size_t count = operators.size();
  if (count == 0) raise("BadParameters", "program needs at least one operator");
  if (weights.size() != count)
    raise("LengthMismatch", std::to_string(weights.size()) + " weights for " +
                                std::to_string(count) + " operators");
  if (times.empty()) times.assign(count, 1.0);
  if (order.empty()) {
    order.resize(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
  }

  LcuProgram program;
  program.layout.m = m;
  program.layout.p = p;
  program.layout.n = log2_exact(operators[0].rows());
  program.weights = std::move(weights);
  program.divider_combiner = build_divider_combiner(program.weights, m, tol);
  program.times = std::move(times);
  program.order = std::move(order);

  program.dilations.reserve(count);
  for (const ComplexMatrix& b : operators) {
    if (p == 0) {
      if (!is_unitary(b, tol))
        raise("NotUnitary", "p = 0 programs require unitary operators");
      program.dilations.push_back(b);
    } else {
      program.dilations.push_back(dilate_contraction(b, tol).u);
    }
  }
  program.operators = std::move(operators);

  validate_program(program, tol);
  return program;
}

void validate_program(const LcuProgram& program, double tol) {
  require_layout(program.layout);
  if (program.layout.p > 1)
    raise("BadParameters", "second-group width p must be 0 or 1");
  const std::size_t count = program.term_count();
  if (count == 0) raise("BadParameters", "program has no operators");
  if (static_cast<Eigen::Index>(count) > program.layout.slit_count())
    raise("TooManyWeights", "more operators than slits");
  if (program.weights.size() != count || program.dilations.size() != count ||
      program.times.size() != count || program.order.size() != count ||
      program.divider_combiner.weights.size() != count)
    raise("LengthMismatch", "program component lengths disagree");

  const Eigen::Index work = program.layout.work_dim();
  const Eigen::Index dilated = (Eigen::Index(1) << program.layout.p) * work;
  for (std::size_t i = 0; i < count; ++i) {
    const ComplexMatrix& b = program.operators[i];
    if (b.rows() != work || b.cols() != work)
      raise("DimensionMismatch", "operator " + std::to_string(i) + " is not " +
                                     std::to_string(work) + "-dimensional");
    if (!is_contraction(b, tol))
      raise("NotContraction", "operator " + std::to_string(i));
    const ComplexMatrix& u = program.dilations[i];
    if (u.rows() != dilated || u.cols() != dilated)
      raise("DimensionMismatch", "dilation " + std::to_string(i));
    if (!is_unitary(u, tol)) raise("NotUnitary", "dilation " + std::to_string(i));
    if ((u.topLeftCorner(work, work) - b).norm() > tol)
      raise("BadDilation", "dilation " + std::to_string(i) + " does not embed its operator");
    if (!(program.times[i] > 0.0))
      raise("BadParameters", "gate time " + std::to_string(i) + " must be positive");
  }

  if (!is_unitary(program.divider_combiner.v, tol) ||
      !is_unitary(program.divider_combiner.w, tol))
    raise("NotUnitary", "divider/combiner");
  for (std::size_t i = 0; i < count; ++i) {
    const double expected = std::sqrt(program.divider_combiner.weights[i]);
    if (std::abs(program.divider_combiner.v(static_cast<Eigen::Index>(i), 0) -
                 Complex(expected, 0.0)) > tol)
      raise("BadDivider", "divider column does not carry the weight roots");
  }

  std::vector<bool> seen(count, false);
  for (std::size_t g : program.order) {
    if (g >= count || seen[g]) raise("BadOrder", "order is not a permutation of 0..M-1");
    seen[g] = true;
  }
}

std::vector<double> survival_probs(const LcuProgram& program, const StateVector& psi) {
  std::vector<double> b;
  b.reserve(program.term_count());
  for (const ComplexMatrix& op : program.operators) b.push_back((op * psi).squaredNorm());
  return b;
}

StateVector init_register(const RegisterLayout& layout, const StateVector& psi, double tol) {
  require_layout(layout);
  require_state(psi, layout.work_dim(), tol);
  StateVector state = StateVector::Zero(layout.total_dim());
  state.head(layout.work_dim()) = psi;
  return state;
}

StateVector apply_first_group(const StateVector& state, const ComplexMatrix& u, double tol) {
  if (!is_square(u) || state.size() % u.rows() != 0)
    raise("DimensionMismatch", "first-group unitary does not divide the register");
  if (!is_unitary(u, tol)) raise("NotUnitary", "first-group operator");
  return apply_first_group_unchecked(state, u);
}

StateVector apply_controlled(const StateVector& state, std::size_t slit,
                             const ComplexMatrix& u_dilated, double tol) {
  if (!is_square(u_dilated) || state.size() % u_dilated.rows() != 0)
    raise("DimensionMismatch", "controlled unitary does not divide the register");
  const Eigen::Index slits = state.size() / u_dilated.rows();
  if (static_cast<Eigen::Index>(slit) >= slits)
    raise("SlitOutOfRange", "slit " + std::to_string(slit) + " of " + std::to_string(slits));
  if (!is_unitary(u_dilated, tol)) raise("NotUnitary", "controlled operator");
  return apply_controlled_unchecked(state, slit, u_dilated);
}

Projection project_second_group(const StateVector& state, const RegisterLayout& layout) {
  if (state.size() != layout.total_dim())
    raise("DimensionMismatch", "state does not match the register layout");
  double kept = 0.0;
  const double prob = second_group_zero_weight(state, layout, &kept);
  if (kept < kProjectionFloor)
    raise("ZeroProbabilityProjection", "second-group zero slice has weight " +
                                           std::to_string(kept));
  return Projection{prob, condition_second_group(state, layout, kept)};
}

Projection project_first_group(const StateVector& state, const RegisterLayout& layout) {
  if (state.size() != layout.total_dim())
    raise("DimensionMismatch", "state does not match the register layout");
  const double kept = state.head(layout.block_dim()).squaredNorm();
  const double prob = kept / state.squaredNorm();
  if (kept < kProjectionFloor)
    raise("ZeroProbabilityProjection", "first-group zero slice has weight " +
                                           std::to_string(kept));
  StateVector out = StateVector::Zero(state.size());
  out.head(layout.block_dim()) = state.head(layout.block_dim()) / std::sqrt(kept);
  return Projection{prob, std::move(out)};
}

RunTrace run_swp_exact(const LcuProgram& program, const StateVector& psi, double tol) {
  validate_program(program, tol);
  const RegisterLayout& layout = program.layout;
  require_state(psi, layout.work_dim(), tol);

  RunTrace trace;
  trace.overall_probability = 1.0;

  StateVector state = init_register(layout, psi, tol);
  state = apply_first_group_unchecked(state, program.divider_combiner.v);

  for (std::size_t g : program.order) {
    state = apply_controlled_unchecked(state, g, program.dilations[g]);
    trace.elapsed_time += program.times[g];
    double kept = 0.0;
    const double prob = second_group_zero_weight(state, layout, &kept);
    trace.step_probabilities.push_back(prob);
    trace.overall_probability *= prob;
    if (kept < kProjectionFloor) {
      trace.outcomes.push_back(false);
      trace.annihilated = true;
      trace.annihilated_step = trace.step_probabilities.size() - 1;
      trace.overall_probability = 0.0;
      return trace;
    }
    trace.outcomes.push_back(true);
    state = condition_second_group(state, layout, kept);
  }

  state = apply_first_group_unchecked(state, program.divider_combiner.w);
  const double kept = state.head(layout.block_dim()).squaredNorm();
  const double prob = kept / state.squaredNorm();
  trace.step_probabilities.push_back(prob);
  trace.overall_probability *= prob;
  if (kept < kProjectionFloor) {
    trace.outcomes.push_back(false);
    trace.annihilated = true;
    trace.annihilated_step = trace.step_probabilities.size() - 1;
    trace.overall_probability = 0.0;
    return trace;
  }
  trace.outcomes.push_back(true);

  trace.final_state = state.head(layout.work_dim()) / std::sqrt(kept);
  return trace;
}

RunTrace run_final_projection(const LcuProgram& program, const StateVector& psi, double tol) {
  validate_program(program, tol);
  const RegisterLayout& layout = program.layout;
  require_state(psi, layout.work_dim(), tol);

  RunTrace trace;
  StateVector state = init_register(layout, psi, tol);
  state = apply_first_group_unchecked(state, program.divider_combiner.v);
  for (std::size_t g : program.order) {
    state = apply_controlled_unchecked(state, g, program.dilations[g]);
    trace.elapsed_time += program.times[g];
  }
  state = apply_first_group_unchecked(state, program.divider_combiner.w);

  // Combined projection: first group and second group both all-zeros.
  const double kept = state.head(layout.work_dim()).squaredNorm();
  const double prob = kept / state.squaredNorm();
  trace.step_probabilities.push_back(prob);
  trace.overall_probability = prob;
  if (kept < kProjectionFloor) {
    trace.outcomes.push_back(false);
    trace.annihilated = true;
    trace.annihilated_step = 0;
    trace.overall_probability = 0.0;
    return trace;
  }
  trace.outcomes.push_back(true);
  trace.final_state = state.head(layout.work_dim()) / std::sqrt(kept);
  return trace;
}

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    0x9e3779b9u};
  return std::mt19937_64(seq);
}

// 53-bit uniform in [0, 1); avoids the implementation-defined distribution
// adaptors so identical seeds give identical streams everywhere.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

MonteCarloSummary run_swp_montecarlo(const LcuProgram& program, const StateVector& psi,
                                     std::uint64_t seed, std::size_t trials, double tol) {
  if (trials < 1) raise("BadParameters", "trials must be >= 1");
  validate_program(program, tol);
  const RegisterLayout& layout = program.layout;
  require_state(psi, layout.work_dim(), tol);

  const std::size_t steps = program.term_count() + 1;
  MonteCarloSummary summary;
  summary.trials = trials;
  summary.steps.resize(steps);

  const StateVector initial = init_register(layout, psi, tol);
  double attempts_sum = 0.0, attempts_sq = 0.0;
  double elapsed_sum = 0.0, elapsed_sq = 0.0;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 eng = trial_engine(seed, trial);
    std::size_t attempts = 0;
    double elapsed = 0.0;
    bool done = false;
    while (!done) {
      ++attempts;
      StateVector state = apply_first_group_unchecked(initial, program.divider_combiner.v);
      bool failed = false;
      for (std::size_t pos = 0; pos < program.order.size(); ++pos) {
        const std::size_t g = program.order[pos];
        state = apply_controlled_unchecked(state, g, program.dilations[g]);
        elapsed += program.times[g];
        double kept = 0.0;
        const double prob = second_group_zero_weight(state, layout, &kept);
        if (kept < kProjectionFloor)
          raise("ZeroProbabilityProjection",
                "step " + std::to_string(pos) + " can never succeed");
        ++summary.steps[pos].reached;
        if (uniform01(eng) < prob) {
          ++summary.steps[pos].succeeded;
          state = condition_second_group(state, layout, kept);
        } else {
          failed = true;
          break;
        }
      }
      if (failed) continue;

      state = apply_first_group_unchecked(state, program.divider_combiner.w);
      const double kept = state.head(layout.block_dim()).squaredNorm();
      const double prob = kept / state.squaredNorm();
      if (kept < kProjectionFloor)
        raise("ZeroProbabilityProjection", "final projection can never succeed");
      ++summary.steps[steps - 1].reached;
      if (uniform01(eng) < prob) {
        ++summary.steps[steps - 1].succeeded;
        done = true;
      }
    }
    const double att = static_cast<double>(attempts);
    attempts_sum += att;
    attempts_sq += att * att;
    elapsed_sum += elapsed;
    elapsed_sq += elapsed * elapsed;
  }

  const double count = static_cast<double>(trials);
  summary.mean_attempts = attempts_sum / count;
  summary.mean_restarts = summary.mean_attempts - 1.0;
  summary.mean_elapsed = elapsed_sum / count;
  if (trials > 1) {
    const double att_var =
        std::max(0.0, (attempts_sq - attempts_sum * attempts_sum / count) / (count - 1.0));
    const double ela_var =
        std::max(0.0, (elapsed_sq - elapsed_sum * elapsed_sum / count) / (count - 1.0));
    summary.attempts_stddev = std::sqrt(att_var);
    summary.elapsed_stddev = std::sqrt(ela_var);
  }
  return summary;
}

}  // namespace dqc
