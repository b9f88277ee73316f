// Serial reference implementations against the OpenMP kernels.
//
//   ./narayana_bench --benchmark_filter=Narayana

#include <benchmark/benchmark.h>

#include "narayana/generating.hpp"
#include "narayana/kernels.hpp"
#include "narayana/poset.hpp"
#include "narayana/reference.hpp"

using namespace narayana;

namespace {

ComputeOptions jobs_option(const benchmark::State& state) {
  ComputeOptions o;
  o.max_cells = 30;
  o.jobs = static_cast<int>(state.range(2));
  return o;
}

void BM_NarayanaReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::narayana_polynomial(n, m));
}

void BM_NarayanaParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const ComputeOptions o = jobs_option(state);
  for (auto _ : state) benchmark::DoNotOptimize(narayana_polynomial(n, m, o));
}

void BM_SytReference(benchmark::State& state) {
  const Partition shape({5, 4, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(reference::syt_descent_polynomial(shape));
}

void BM_SytParallel(benchmark::State& state) {
  const Partition shape({5, 4, 3, 2});
  ComputeOptions o;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syt_descent_polynomial(shape, o));
}

void BM_WReference(benchmark::State& state) {
  const LabeledPoset p = column_strict_ferrers_poset(Partition({4, 3, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(reference::w_polynomial(p));
}

void BM_WParallel(benchmark::State& state) {
  const LabeledPoset p = column_strict_ferrers_poset(Partition({4, 3, 2, 1}));
  ComputeOptions o;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(w_polynomial(p, o));
}

void BM_OrderPolynomialReference(benchmark::State& state) {
  const LabeledPoset p = column_strict_ferrers_poset(Partition({3, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(reference::order_polynomial(p, 6));
}

void BM_OrderPolynomialParallel(benchmark::State& state) {
  const LabeledPoset p = column_strict_ferrers_poset(Partition({3, 2, 1}));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::count_poset_partitions(p, 6, jobs));
}

}  // namespace

BENCHMARK(BM_NarayanaReference)->Args({4, 5, 0})->Args({7, 3, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NarayanaParallel)
    ->Args({4, 5, 1})->Args({4, 5, 0})->Args({7, 3, 1})->Args({7, 3, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SytReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SytParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderPolynomialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderPolynomialParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
