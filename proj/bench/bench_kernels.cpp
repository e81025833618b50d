// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "natgt/rng.hpp"
#include "natgt/serial.hpp"
#include "natgt/simulation.hpp"

using namespace natgt;

namespace {

const BitMatrix& separating_input() {
  static const BitMatrix g = gen_random(300, 28, 0.5, 1);
  return g;
}

const BitMatrix& disjunct_input() {
  static const BitMatrix m = gen_rs_concatenated(3, 40);
  return m;
}

const MeasurementScheme& scheme_input() {
  static const MeasurementScheme s = build_scheme({.n = 1000, .d = 6, .u = 3, .epsilon = 0.1, .seed = 3});
  return s;
}

const IndexSet kItems{17, 250, 251, 600, 999};

void BM_SeparatingSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::is_completely_separating(separating_input(), 2, 2));
}
void BM_SeparatingParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_separating(separating_input(), 2, 2));
}

void BM_DisjunctSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::is_disjunct(disjunct_input(), 4));
}
void BM_DisjunctParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_disjunct(disjunct_input(), 4));
}

void BM_EncodeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::simulate_instance(scheme_input(), kItems));
}
void BM_EncodeParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(simulate_instance(scheme_input(), kItems));
}

void BM_DecodeSerial(benchmark::State& state) {
  const BitVector outcome = simulate_instance(scheme_input(), kItems);
  for (auto _ : state) benchmark::DoNotOptimize(serial::decode(scheme_input(), outcome));
}
void BM_DecodeParallel(benchmark::State& state) {
  const BitVector outcome = simulate_instance(scheme_input(), kItems);
  for (auto _ : state) benchmark::DoNotOptimize(decode(scheme_input(), outcome));
}

void BM_Simulation(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_simulation({.n = 200, .d = 4, .u = 2, .epsilon = 0.1, .seed = 1}, 50));
  omp_set_num_threads(omp_get_num_procs());
}

}  // namespace

BENCHMARK(BM_SeparatingSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparatingParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjunctSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjunctParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EncodeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EncodeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Simulation)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
