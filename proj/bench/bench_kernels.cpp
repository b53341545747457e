#include <random>

#include <benchmark/benchmark.h>

#include "bwy/asympt.hpp"
#include "bwy/geometry.hpp"
#include "bwy/kernels.hpp"

using namespace bwy;

namespace {

std::vector<cplx> weights(int n) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> w(static_cast<std::size_t>(n + 1));
  for (auto& x : w) x = {d(rng), d(rng)};
  return w;
}

kernels::SumInput sum_input(int n, int k0) {
  kernels::SumInput in;
  for (int k = 0; k < k0; ++k) {
    in.eps.push_back(k % 2 ? 1 : -1);
    in.weights.push_back(weights(n));
  }
  return in;
}

template <bool Parallel>
void BM_AssembleLambda(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QRoot root(n);
  const auto w = weights(n);
  CMatrix out;
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::assemble_lambda_omp(out, Letter::L, w, 1.0, root);
    } else {
      kernels::assemble_lambda_serial(out, Letter::L, w, 1.0, root);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_MultiIndexSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QRoot root(n);
  const auto in = sum_input(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::multi_index_sum_omp(in, root)
                                      : kernels::multi_index_sum_serial(in, root));
  }
}

template <bool Parallel>
void BM_GrowthSeries(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const DiffeoWord w = parse_word("LLRR");
  const CriticalPoint cp = find_critical_point(epsilon_signature(w));
  const EdgeWeightSweep s = critical_to_edge_weights(cp, w, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth_series(w, s, n_max, Parallel ? Exec::Parallel : Exec::Serial));
  }
}

}  // namespace

BENCHMARK(BM_AssembleLambda<false>)->Arg(151)->Arg(601);
BENCHMARK(BM_AssembleLambda<true>)->Arg(151)->Arg(601);
BENCHMARK(BM_MultiIndexSum<false>)->Arg(15)->Arg(31);
BENCHMARK(BM_MultiIndexSum<true>)->Arg(15)->Arg(31);
BENCHMARK(BM_GrowthSeries<false>)->Arg(151)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrowthSeries<true>)->Arg(151)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
