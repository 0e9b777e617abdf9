#include "cohchan/cohchan.hpp"

#include <benchmark/benchmark.h>

using namespace cohchan;

namespace {

void BM_ApplyChannelEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix input = maximally_coherent_state(n);
    const CorrelatedChannel channel(ChannelKind::PhaseFlip, 0.3, 0.4, n);
    for (auto _ : state) {
        ComplexMatrix out = apply_channel(input, channel);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_ApplyPhaseFlipFast(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix input = maximally_coherent_state(n);
    const CorrelatedChannel channel(ChannelKind::PhaseFlip, 0.3, 0.4, n);
    for (auto _ : state) {
        ComplexMatrix out = apply_phase_flip_fast(input, channel);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_ApplyDepolarizing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix input = maximally_coherent_state(n);
    const CorrelatedChannel channel(ChannelKind::Depolarizing, 0.3, 0.4, n);
    for (auto _ : state) {
        ComplexMatrix out = apply_channel(input, channel);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_DephasingFactorTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double sum = 0.0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            sum += dephasing_factor(mask, n, 0.3, 0.4);
        benchmark::DoNotOptimize(sum);
    }
}

void BM_CoherenceReport(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix rho = apply_phase_flip_fast(
        maximally_coherent_state(n), {ChannelKind::PhaseFlip, 0.3, 0.4, n});
    for (auto _ : state) {
        CoherenceReport rep = report(rho);
        benchmark::DoNotOptimize(rep.c_re);
    }
}

BENCHMARK(BM_ApplyChannelEnumeration)->DenseRange(3, 9);
BENCHMARK(BM_ApplyPhaseFlipFast)->DenseRange(3, 11);
BENCHMARK(BM_ApplyDepolarizing)->DenseRange(3, 6);
BENCHMARK(BM_DephasingFactorTable)->DenseRange(6, 12, 2);
BENCHMARK(BM_CoherenceReport)->DenseRange(3, 8);

}  // namespace

BENCHMARK_MAIN();
