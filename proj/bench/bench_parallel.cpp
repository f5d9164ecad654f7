// Parallel against serial kernels: the node map alone and full M/Q evaluations.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hypaskey/hyperbolic_gamma.hpp"
#include "hypaskey/qaskey.hpp"
#include "hypaskey/quadrature.hpp"

using namespace hypaskey;

namespace {

quad::Execution mode(const benchmark::State& state) {
  return state.range(0) ? quad::Execution::parallel : quad::Execution::serial;
}

void BM_node_map_sb(benchmark::State& state) {
  const HypGammaParams p(0.7);
  const std::size_t n = 256;
  std::vector<Complex> out(n);
  for (auto _ : state) {
    quad::map_indices(
        n, [&](std::size_t k) { return ln_sb(p, Complex(-3.0 + 6.0 * k / n, 0.2), 1e-12); }, out, mode(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void BM_eval_M(benchmark::State& state) {
  EvalConfig cfg;
  cfg.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(eval_M(0.5, 0.1, Complex(0.1, 0.25), {}, cfg).mantissa);
}

void BM_eval_Q(benchmark::State& state) {
  EvalConfig cfg;
  cfg.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(eval_Q(0.6, 0.05, 0.2, {}, cfg).mantissa);
}

}  // namespace

BENCHMARK(BM_node_map_sb)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval_M)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval_Q)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
