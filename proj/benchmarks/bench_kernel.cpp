// Microbenchmarks for the O(N^2) kernel contraction and its ingredients.

#include <benchmark/benchmark.h>

#include "nwc/operators.hpp"

using namespace nwc;

namespace {

std::shared_ptr<const GaussianPacket> packet(Spin s) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
  w[0] = 1.0;
  return std::make_shared<GaussianPacket>(s, Eigen::Vector3d::Zero(),
                                          Eigen::Vector3d::Constant(0.5), w);
}

void BM_kernel_contraction_candidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Spin s(1);
  const auto psi = packet(s);
  const QuadratureRule q =
      QuadratureRule::gauss_hermite3(psi->center(), psi->width(), n);
  const KernelOperator op = candidate_j_spatial_kernel(s, 0);
  for (auto _ : state) {
    auto applied = apply_kernel(op, psi, q);
    benchmark::DoNotOptimize(applied->value_at_node(0));
  }
  state.SetComplexityN(static_cast<long long>(q.size()));
}

void BM_kernel_contraction_dirac(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = packet(Spin(1));
  const QuadratureRule q =
      QuadratureRule::gauss_hermite3(psi->center(), psi->width(), n);
  const KernelOperator op = dirac_current_kernel(FourVector{}, 0);
  for (auto _ : state) {
    auto applied = apply_kernel(op, psi, q);
    benchmark::DoNotOptimize(applied->value_at_node(0));
  }
  state.SetComplexityN(static_cast<long long>(q.size()));
}

void BM_commutator_expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = packet(Spin(1));
  const QuadratureRule q =
      QuadratureRule::gauss_hermite3(psi->center(), psi->width(), n);
  const KernelOperator op = candidate_j0_kernel(Spin(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(commutator_expectation(0, op, psi, q));
}

void BM_packet_eval(benchmark::State& state) {
  const auto psi = packet(Spin(1));
  const Eigen::Vector3d p(0.2, -0.1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(psi->eval(p));
}

void BM_boosted_eval(benchmark::State& state) {
  const auto boosted = boost(packet(Spin(1)), Eigen::Vector3d(0, 0, 0.5));
  const Eigen::Vector3d p(0.2, -0.1, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(boosted->eval(p));
}

}  // namespace

BENCHMARK(BM_kernel_contraction_candidate)->Arg(8)->Arg(10)->Arg(12)->Arg(14)
    ->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_contraction_dirac)->Arg(8)->Arg(10)->Arg(12)
    ->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_commutator_expectation)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packet_eval);
BENCHMARK(BM_boosted_eval);

BENCHMARK_MAIN();
