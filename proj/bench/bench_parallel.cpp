// Serial reference vs OpenMP kernels. Thread count follows EPKIT_THREADS.

#include <benchmark/benchmark.h>

#include "epkit/banach.hpp"
#include "epkit/battery.hpp"

using namespace epkit;

namespace {

banach::FloatMatrix sample(std::size_t n) {
    return banach::to_float_matrix(battery::gen_matrix({3, n, std::nullopt, 3, battery::Kind::arbitrary, true}));
}

void BM_HermitianSerial(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(banach::hermitian_check_serial(a, banach::PNorm::two()));
}

void BM_HermitianParallel(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(banach::hermitian_check(a, banach::PNorm::two()));
}

void BM_BatterySerial(benchmark::State& state) {
    const auto cfgs = battery::mixed_configs(1, static_cast<std::size_t>(state.range(0)), {2, 3, 4, 5});
    for (auto _ : state) benchmark::DoNotOptimize(battery::run_battery_serial("3.7", cfgs));
}

void BM_BatteryParallel(benchmark::State& state) {
    const auto cfgs = battery::mixed_configs(1, static_cast<std::size_t>(state.range(0)), {2, 3, 4, 5});
    for (auto _ : state) benchmark::DoNotOptimize(battery::run_battery("3.7", cfgs));
}

}  // namespace

BENCHMARK(BM_HermitianSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HermitianParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatterySerial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatteryParallel)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
