#include <benchmark/benchmark.h>

#include <random>

#include "dtseries/co_oracle.hpp"
#include "dtseries/fixture.hpp"

using namespace dtseries;

namespace {

void integrate_at(benchmark::State& state, Execution exec) {
  static const Fixture f = load_fixture("quadric_p4_d2");
  std::mt19937_64 rng(1);
  const EvalPoint pt = random_eval_point(rng);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(*f.toric, *f.toric_line_bundle, n, pt, exec));
  }
  state.counters["fixed_points"] = static_cast<double>(hilb_fixed_points(*f.toric, n).size());
}

void BM_integrate_serial(benchmark::State& s) { integrate_at(s, Execution::serial); }
void BM_integrate_parallel(benchmark::State& s) { integrate_at(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_integrate_serial)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_integrate_parallel)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
