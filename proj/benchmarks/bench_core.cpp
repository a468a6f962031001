#include <benchmark/benchmark.h>

#include <random>

#include "dqc/analysis.hpp"
#include "dqc/gtc.hpp"

namespace {

using namespace dqc;

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  return a;
}

ComplexMatrix random_contraction(std::mt19937_64& rng, Eigen::Index dim) {
  ComplexMatrix a = random_matrix(rng, dim);
  return a * (0.8 / operator_norm(a));
}

ComplexMatrix random_hermitian_contraction(std::mt19937_64& rng, Eigen::Index dim) {
  ComplexMatrix a = random_matrix(rng, dim);
  ComplexMatrix h = ((a + a.adjoint()) / 2.0).eval();
  return h * (0.9 / operator_norm(h));
}

StateVector random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

void BM_DecomposeContraction(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_contraction(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_contraction(a));
}
BENCHMARK(BM_DecomposeContraction)->Arg(4)->Arg(16)->Arg(64);

void BM_DilateContraction(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ComplexMatrix b = random_contraction(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dilate_contraction(b));
}
BENCHMARK(BM_DilateContraction)->Arg(4)->Arg(16)->Arg(64);

void BM_ChebyshevT(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const ComplexMatrix h = random_hermitian_contraction(rng, 16);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebyshev_T(static_cast<int>(state.range(0)), h));
}
BENCHMARK(BM_ChebyshevT)->Arg(4)->Arg(16)->Arg(64);

void BM_RunSwpExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const Eigen::Index dim = Eigen::Index(1) << n;
  const ComplexMatrix h = random_hermitian_contraction(rng, dim);
  const GtcPlan plan = build_gtc_program(h, 3, 4);
  const StateVector psi = random_state(rng, dim);
  for (auto _ : state) benchmark::DoNotOptimize(run_swp_exact(plan.program, psi));
}
BENCHMARK(BM_RunSwpExact)->Arg(2)->Arg(4)->Arg(6);

void BM_MonteCarlo(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const ComplexMatrix b = random_contraction(rng, 4);
  const auto program = make_program(1, 1, {0.4, 0.6}, {b, b});
  const StateVector psi = random_state(rng, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_swp_montecarlo(program, psi, 7, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000);

void BM_OrderSearchExhaustive(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  std::mt19937_64 rng(6);
  std::vector<double> weights(terms, 1.0);
  std::vector<ComplexMatrix> operators;
  for (int i = 0; i < terms; ++i) operators.push_back(random_contraction(rng, 2));
  int m = 0;
  while ((1 << m) < terms) ++m;
  const auto program = make_program(m, 1, weights, operators);
  const StateVector psi = random_state(rng, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(order_search(program, psi, SearchMethod::exhaustive));
}
BENCHMARK(BM_OrderSearchExhaustive)->Arg(4)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
