#include "ltl2buchi/families.hpp"
#include "ltl2buchi/pipeline.hpp"
#include "ltl2buchi/random_formula.hpp"

#include <benchmark/benchmark.h>

using namespace ltl2buchi;

namespace {

void bench_family(benchmark::State& state, const std::string& name) {
  int n = int(state.range(0));
  for (auto _ : state) {
    Session s;
    Formula f = family(s, name, n);
    Translation t = run_pipeline(s, f, {});
    benchmark::DoNotOptimize(t.ba_stats.states);
  }
}

void BM_theta(benchmark::State& state) { bench_family(state, "theta"); }
void BM_u2(benchmark::State& state) { bench_family(state, "u2"); }
void BM_c2(benchmark::State& state) { bench_family(state, "c2"); }
void BM_e(benchmark::State& state) { bench_family(state, "e"); }

void BM_random_corpus(benchmark::State& state) {
  for (auto _ : state) {
    Session s;
    GenConfig cfg;
    cfg.size_lo = 10;
    cfg.size_hi = 15;
    cfg.propositions = 4;
    cfg.seed = 7;
    RandomFormulaGen gen(s, cfg);
    uint64_t total = 0;
    for (int i = 0; i < int(state.range(0)); ++i)
      total += run_pipeline(s, to_pnf(s.formulas, gen()), {}).ba_stats.states;
    benchmark::DoNotOptimize(total);
  }
}

} // namespace

BENCHMARK(BM_theta)->DenseRange(1, 5);
BENCHMARK(BM_u2)->Arg(4)->Arg(8);
BENCHMARK(BM_c2)->Arg(3)->Arg(6);
BENCHMARK(BM_e)->Arg(4)->Arg(8);
BENCHMARK(BM_random_corpus)->Arg(20);

BENCHMARK_MAIN();
