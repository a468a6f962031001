#include "dqc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dqc {

namespace {

void require_permutation(const std::vector<std::size_t>& order, std::size_t count) {
  if (order.size() != count) raise("LengthMismatch", "order length does not match");
  std::vector<bool> seen(count, false);
  for (std::size_t g : order) {
    if (g >= count || seen[g]) raise("BadOrder", "order is not a permutation of 0..M-1");
    seen[g] = true;
  }
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0) || p > 1.0 + 1e-9)
    raise("BadProbability", std::string(what) + " = " + std::to_string(p));
}

}  // namespace

std::vector<double> closed_form_step_probs(const std::vector<double>& coefficients,
                                           const std::vector<double>& b_values,
                                           const std::vector<std::size_t>& order,
                                           double a_dag_a_expect) {
  const std::size_t count = coefficients.size();
  if (b_values.size() != count)
    raise("LengthMismatch", std::to_string(b_values.size()) + " survivals for " +
                                std::to_string(count) + " coefficients");
  require_permutation(order, count);
  const double total = std::accumulate(coefficients.begin(), coefficients.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-6)
    raise("BadParameters", "coefficients must be normalized, sum = " + std::to_string(total));
  for (double b : b_values) require_probability(b, "survival probability");
  require_probability(a_dag_a_expect, "target expectation");

  std::vector<double> probs;
  probs.reserve(count + 1);
  double applied = 0.0;   // sum of b_j c_j over already-applied gates
  double pending = total; // sum of c_j over gates not yet applied
  for (std::size_t g : order) {
    const double c = coefficients[g];
    const double numerator = applied + b_values[g] * c + (pending - c);
    const double denominator = applied + pending;
    probs.push_back(numerator / denominator);
    applied += b_values[g] * c;
    pending -= c;
  }
  if (applied < 1e-300) raise("ZeroProbabilityProjection", "every subwave was annihilated");
  probs.push_back(a_dag_a_expect / applied);
  return probs;
}

double mean_time_swp(const std::vector<double>& step_probs, const std::vector<double>& times,
                     const std::vector<std::size_t>& order) {
  const std::size_t count = times.size();
  if (step_probs.size() != count + 1)
    raise("LengthMismatch", "need M+1 step probabilities for M gate times");
  require_permutation(order, count);
  for (double p : step_probs) require_probability(p, "step probability");
  for (double t : times)
    if (!(t > 0.0)) raise("BadParameters", "gate times must be positive");

  double numerator = 0.0;
  double prefix = 1.0;
  for (std::size_t l = 0; l < count; ++l) {
    numerator += prefix * times[order[l]];
    prefix *= step_probs[l];
  }
  const double denominator = prefix * step_probs[count];
  // zero-probability steps flag the expectation as infinite rather than throw
  return numerator / denominator;
}

double mean_time_final(double overall_prob, const std::vector<double>& times) {
  require_probability(overall_prob, "overall probability");
  double total = 0.0;
  for (double t : times) {
    if (!(t > 0.0)) raise("BadParameters", "gate times must be positive");
    total += t;
  }
  return total / overall_prob;
}

TimingModel compute_timing(const std::vector<double>& step_probs,
                           const std::vector<double>& times,
                           const std::vector<std::size_t>& order) {
  TimingModel model;
  model.step_probs = step_probs;
  model.gate_times = times;
  model.et_swp = mean_time_swp(step_probs, times, order);
  double overall = 1.0;
  for (double p : step_probs) overall *= p;
  model.et_final = mean_time_final(overall, times);
  return model;
}

OrderSearchResult order_search(const LcuProgram& program, const StateVector& psi,
                               std::optional<SearchMethod> force, bool collect_evaluations,
                               double tol) {
  validate_program(program, tol);
  const std::size_t count = program.term_count();
  const std::vector<double> b = survival_probs(program, psi);
  const std::vector<double>& c = program.divider_combiner.weights;
  const double a_dag_a = (program.combined_operator() * psi).squaredNorm();

  OrderSearchResult result;
  result.method = force.value_or(count <= 8 ? SearchMethod::exhaustive : SearchMethod::greedy);

  auto evaluate = [&](const std::vector<std::size_t>& order) {
    std::vector<double> probs = closed_form_step_probs(c, b, order, a_dag_a);
    const double et = mean_time_swp(probs, program.times, order);
    ++result.evaluated;
    if (collect_evaluations)
      result.evaluations.push_back(OrderEvaluation{order, probs, et});
    return et;
  };

  std::vector<std::size_t> identity(count);
  std::iota(identity.begin(), identity.end(), 0);

  if (result.method == SearchMethod::exhaustive) {
    std::vector<std::size_t> order = identity;
    result.best_order = order;
    result.best_et = evaluate(order);
    while (std::next_permutation(order.begin(), order.end())) {
      const double et = evaluate(order);
      if (et < result.best_et) {
        result.best_et = et;
        result.best_order = order;
      }
    }
  } else {
    // Fail-early heuristic: lossier gates (smaller survival) first, so a
    // restart costs as little accumulated time as possible; shorter gates
    // first among equals. Exact for two equal-time gates.
    std::vector<std::size_t> candidate = identity;
    std::stable_sort(candidate.begin(), candidate.end(), [&](std::size_t x, std::size_t y) {
      if (b[x] != b[y]) return b[x] < b[y];
      return program.times[x] < program.times[y];
    });
    const double et_identity = evaluate(identity);
    const double et_candidate = evaluate(candidate);
    if (et_candidate < et_identity) {
      result.best_order = candidate;
      result.best_et = et_candidate;
    } else {
      result.best_order = identity;
      result.best_et = et_identity;
    }
  }
  return result;
}

std::vector<SweepRow> speedup_sweep(double p, const std::vector<int>& m_values) {
  if (!(p > 0.0) || !(p < 1.0)) raise("BadProbability", "p must lie in (0, 1)");
  if (m_values.empty()) raise("BadParameters", "sweep needs at least one M value");
  std::vector<SweepRow> rows;
  rows.reserve(m_values.size());
  for (int m : m_values) {
    if (m < 1) raise("BadParameters", "M must be >= 1");
    SweepRow row;
    row.terms = m;
    row.p = p;
    const double pm = std::pow(p, m);
    row.et = (1.0 - pm) / (pm * p * (1.0 - p));
    row.et_final = m / (pm * p);
    row.ratio = m * (1.0 - p) / (1.0 - pm);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dqc
