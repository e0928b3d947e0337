#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "polaract/decoder.hpp"
#include "polaract/evolution.hpp"
#include "polaract/kernel.hpp"

using namespace polaract;

static void BM_Evolve(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto profile = evolve(0.5, k);
        benchmark::DoNotOptimize(profile.z.data());
    }
    state.SetComplexityN(1 << k);
}
BENCHMARK(BM_Evolve)->DenseRange(12, 22, 2)->Complexity();

static void BM_PolarEncode(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::size_t n = std::size_t{1} << k;
    std::mt19937_64 rng(5);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    for (auto _ : state) {
        polar_encode_inplace(bits);
        benchmark::DoNotOptimize(bits.data());
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_PolarEncode)->DenseRange(8, 14, 2)->Complexity();

static void BM_ScDecode(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::size_t n = std::size_t{1} << k;
    const auto profile = evolve(0.3, k);
    const auto code = PolarCode::rate_target(profile, 0.5);
    ScDecoder decoder(code);
    std::mt19937_64 rng(6);
    ChannelObservation obs;
    obs.lr.resize(n);
    for (auto& l : obs.lr) {
        const int roll = static_cast<int>(rng() % 3);
        l = roll == 0 ? 1.0 : (roll == 1 ? std::numeric_limits<double>::infinity() : 0.0);
    }
    for (auto _ : state) {
        auto res = decoder.decode(obs);
        benchmark::DoNotOptimize(res.message.data());
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ScDecode)->DenseRange(6, 12, 2)->Complexity();

static void BM_LlrCombineBad(benchmark::State& state) {
    double a = 0.7, b = -1.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(llr_combine_bad(a, b));
        a += 1e-9;
    }
}
BENCHMARK(BM_LlrCombineBad);

static void BM_SimulateBler(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto profile = evolve(0.3, k);
    const auto code = PolarCode::rate_target(profile, 0.45);
    const ChannelModel model(Bec{0.3});
    for (auto _ : state) {
        auto report = simulate_bler(code, model, 100, 12345);
        benchmark::DoNotOptimize(report.bler);
    }
}
BENCHMARK(BM_SimulateBler)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
