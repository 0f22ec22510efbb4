// Serial reference vs OpenMP kernels.

#include "sbsearch/bench.hpp"
#include "sbsearch/bounds.hpp"

#include <benchmark/benchmark.h>

using namespace sbs;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_TupleScan(benchmark::State& st) {
    const BoundConstant c = BoundConstant::headline();
    for (auto _ : st) {
        auto r = verify_tuple_inequality(4, 2450, c, ScanMode::InductiveStep, exec_of(st));
        benchmark::DoNotOptimize(r.tuples);
    }
}
BENCHMARK(BM_TupleScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_WorstPair(benchmark::State& st) {
    for (auto _ : st) {
        auto w = worst_pair(300, exec_of(st));
        benchmark::DoNotOptimize(w.a);
    }
}
BENCHMARK(BM_WorstPair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SearchBench(benchmark::State& st) {
    const mpz_class n("1000000000000");
    for (auto _ : st) {
        auto r = run_search_bench(TrialPlan{1000, 1}, n, {Algorithm::Km, Algorithm::Csb}, exec_of(st));
        benchmark::DoNotOptimize(r.size());
    }
}
BENCHMARK(BM_SearchBench)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
