// Serial reference vs OpenMP path for the heavier property sweeps.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "nclr/verify.hpp"

using namespace nclr;

namespace {

template <class F>
void run(benchmark::State& state, F suite) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  state.SetLabel(std::string(to_string(exec)) + ", " + std::to_string(parallel_threads()) +
                 " threads");
  long long checks = 0;
  for (auto _ : state) {
    const SuiteResult r = suite(exec);
    if (!r.passed()) state.SkipWithError("suite failed");
    checks = r.checks;
    benchmark::DoNotOptimize(checks);
  }
  state.counters["checks"] = static_cast<double>(checks);
}

void BM_ThreeMethods(benchmark::State& state) {
  run(state, [](Execution e) { return check_three_methods(7, e); });
}
void BM_CrystalCoxeter(benchmark::State& state) {
  run(state, [](Execution e) { return check_crystal_coxeter(9, 7, 4, e); });
}
void BM_KeyProposition(benchmark::State& state) {
  run(state, [](Execution e) { return check_key_proposition(7, e); });
}
void BM_FrankProposition(benchmark::State& state) {
  run(state, [](Execution e) { return check_frank_proposition(7, e); });
}

}  // namespace

BENCHMARK(BM_ThreeMethods)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalCoxeter)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KeyProposition)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrankProposition)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
