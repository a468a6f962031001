#pragma once

#include <optional>
#include <vector>

#include "dqc/simulator.hpp"

namespace dqc {

/// Step probabilities assembled from the running-ratio closed forms: for
/// gate order sigma, step l succeeds with
///   p_l = (sum_{j<l} b c + b_l c_l + sum_{j>l} c) / (sum_{j<l} b c + c_l + sum_{j>l} c)
/// (coefficients and survivals taken in execution order), and the final
/// projection succeeds with a_dag_a_expect / sum_j b_j c_j. Returns M+1
/// values; their product is a_dag_a_expect by construction.
std::vector<double> closed_form_step_probs(const std::vector<double>& coefficients,
                                           const std::vector<double>& b_values,
                                           const std::vector<std::size_t>& order,
                                           double a_dag_a_expect);

/// Expected total gate time of the restart process with per-step
/// projections: (t_{s0} + p_0 t_{s1} + p_0 p_1 t_{s2} + ...) / (p_0...p_M),
/// where step_probs are in execution order and `order` maps execution
/// position to gate index. A zero step probability yields +infinity.
double mean_time_swp(const std::vector<double>& step_probs, const std::vector<double>& times,
                     const std::vector<std::size_t>& order);

/// Expected total gate time with a single final projection: sum(t) / P.
double mean_time_final(double overall_prob, const std::vector<double>& times);

struct TimingModel {
  std::vector<double> step_probs;
  std::vector<double> gate_times;
  double et_swp = 0.0;
  double et_final = 0.0;
};

TimingModel compute_timing(const std::vector<double>& step_probs,
                           const std::vector<double>& times,
                           const std::vector<std::size_t>& order);

enum class SearchMethod { exhaustive, greedy };

struct OrderEvaluation {
  std::vector<std::size_t> order;
  std::vector<double> step_probs;
  double et = 0.0;
};

struct OrderSearchResult {
  std::vector<std::size_t> best_order;
  double best_et = 0.0;
  SearchMethod method = SearchMethod::exhaustive;
  std::size_t evaluated = 0;
  std::vector<OrderEvaluation> evaluations;  // filled when requested
};

/// Minimize the expected run time over gate orders. All M! orders are
/// evaluated for M <= 8 (or when forced); larger programs use a greedy
/// order (survival ascending, time ascending on ties) compared against
/// the identity order, so the result never loses to the default.
OrderSearchResult order_search(const LcuProgram& program, const StateVector& psi,
                               std::optional<SearchMethod> force = {},
                               bool collect_evaluations = false,
                               double tol = kDefaultTolerance);

struct SweepRow {
  int terms = 0;  // M
  double p = 0.0;
  double et = 0.0;
  double et_final = 0.0;
  double ratio = 0.0;  // et_final / et = M (1-p) / (1 - p^M)
};

/// Uniform-model comparison (all gate times 1, all step probabilities p):
/// Et = (1 - p^M) / (p^{M+1} (1 - p)) versus Et' = M / p^{M+1}.
std::vector<SweepRow> speedup_sweep(double p, const std::vector<int>& m_values);

}  // namespace dqc
