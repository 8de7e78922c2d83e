// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "accred/codes.hpp"
#include "accred/families.hpp"
#include "accred/kernels.hpp"

namespace {

using namespace accred;

const BinaryCode& amal_code(int i) {
  static const BinaryCode codes[] = {family_code(Family::HamAmal, 3), family_code(Family::HamAmal, 5),
                                     family_code(Family::HamAmal, 7)};
  return codes[(i - 3) / 2];
}

void BM_RadiusSerial(benchmark::State& state) {
  const auto& c = amal_code(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::covering_radius_serial(c.words(), c.length()));
}

void BM_RadiusParallel(benchmark::State& state) {
  const auto& c = amal_code(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::covering_radius_parallel(c.words(), c.length()));
  }
}

void BM_NearestSerial(benchmark::State& state) {
  const auto& c = amal_code(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nearest_table_serial(c.words(), c.length()));
}

void BM_NearestParallel(benchmark::State& state) {
  const auto& c = amal_code(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::nearest_table_parallel(c.words(), c.length()));
  }
}

void BM_GcrSerial(benchmark::State& state) {
  const BinaryCode c = joint_example_code();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::generalized_radius_serial(c.words(), c.length(), 2));
}

void BM_GcrParallel(benchmark::State& state) {
  const BinaryCode c = joint_example_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::generalized_radius_parallel(c.words(), c.length(), 2));
  }
}

}  // namespace

BENCHMARK(BM_RadiusSerial)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusParallel)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GcrSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GcrParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
