// Serial reference vs OpenMP paths for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "cycmds/codecheck.hpp"

using namespace cycmds;

namespace {

const CycMatrix& generator_23() {
  static const CycMatrix g = build_generator_matrix(CodeSpec::make(23, {0, 1, 2, 4}));
  return g;
}

void BM_MinorsSerial(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t zero = 0;
    for_each_minor_serial(generator_23(), [&](const std::vector<int>&, const CycInt& d) { zero += d.is_zero(); });
    benchmark::DoNotOptimize(zero);
  }
}

void BM_MinorsParallel(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t zero = 0;
    for_each_minor(generator_23(), [&](const std::vector<int>&, const CycInt& d) { zero += d.is_zero(); });
    benchmark::DoNotOptimize(zero);
  }
}

void census(benchmark::State& state, bool parallel) {
  const auto spec = CodeSpec::make(18, {0, 1, 5, 8});
  BadPrimeOptions o;
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(compute_bad_primes(spec, o));
}

void BM_CensusSerial(benchmark::State& state) { census(state, false); }
void BM_CensusParallel(benchmark::State& state) { census(state, true); }

struct Reduced {
  FieldCtx ctx;
  FieldMatrix m;
};

const Reduced& reduced_17() {
  static const Reduced r = [] {
    const auto ctx = build_field(2, 17);
    return Reduced{ctx, reduce_matrix(build_generator_matrix(CodeSpec::make(17, {0, 1, 2, 4, 8})), ctx)};
  }();
  return r;
}

const Reduced& reduced_7() {
  static const Reduced r = [] {
    const auto ctx = build_field(29, 7);
    return Reduced{ctx, reduce_matrix(build_generator_matrix(CodeSpec::make(7, {0, 1, 3})), ctx)};
  }();
  return r;
}

void BM_IsMdsSerial(benchmark::State& state) {
  const auto& r = reduced_17();
  for (auto _ : state) benchmark::DoNotOptimize(is_mds_serial(r.ctx, r.m));
}

void BM_IsMdsParallel(benchmark::State& state) {
  const auto& r = reduced_17();
  for (auto _ : state) benchmark::DoNotOptimize(is_mds(r.ctx, r.m));
}

void BM_MinDistanceSerial(benchmark::State& state) {
  const auto& r = reduced_7();
  for (auto _ : state) benchmark::DoNotOptimize(brute_min_distance_serial(r.ctx, r.m));
}

void BM_MinDistanceParallel(benchmark::State& state) {
  const auto& r = reduced_7();
  for (auto _ : state) benchmark::DoNotOptimize(brute_min_distance(r.ctx, r.m));
}

}  // namespace

BENCHMARK(BM_MinorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsMdsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsMdsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
