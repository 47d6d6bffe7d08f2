#include "benchmark/benchmark.h"

#include "sicforge/clifford.hpp"
#include "sicforge/dim3.hpp"
#include "sicforge/search.hpp"
#include "sicforge/symplectic.hpp"

namespace {

using namespace sicforge;

void BM_EnumerateSLAffine(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto group = enumerate_group(PrimeModulus(p), GroupKind::SLAffine);
        benchmark::DoNotOptimize(group);
    }
}
BENCHMARK(BM_EnumerateSLAffine)->Arg(3)->Arg(5)->Arg(7);

void BM_ClassCensus(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto census = class_census(PrimeModulus(p), GroupKind::SLAffine);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_ClassCensus)->Arg(3)->Arg(5)->Arg(7);

void BM_Synthesize(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const CliffordGroup cg(p);
    const auto labels = enumerate_group(PrimeModulus(p), GroupKind::SLAffine);
    size_t i = 0;
    for (auto _ : state) {
        auto op = cg.synthesize(labels[i++ % labels.size()], /*verify=*/false);
        benchmark::DoNotOptimize(op);
    }
}
BENCHMARK(BM_Synthesize)->Arg(3)->Arg(5)->Arg(7);

void BM_SynthesizeVerified(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const CliffordGroup cg(p);
    const auto labels = enumerate_group(PrimeModulus(p), GroupKind::SLAffine);
    size_t i = 0;
    for (auto _ : state) {
        auto op = cg.synthesize(labels[i++ % labels.size()], /*verify=*/true);
        benchmark::DoNotOptimize(op);
    }
}
BENCHMARK(BM_SynthesizeVerified)->Arg(3)->Arg(5)->Arg(7);

void BM_PhaseProfile(benchmark::State& state) {
    const CliffordGroup cg(3);
    const auto sic = SicCandidate{3, cg.hw().sic_from_fiducial(family_fiducial(0.2))};
    for (auto _ : state) {
        auto profile = phase_profile(sic);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(BM_PhaseProfile);

void BM_FiducialSearch(benchmark::State& state) {
    SearchConfig cfg;
    cfg.dim = static_cast<int>(state.range(0));
    cfg.restarts = 4;
    cfg.seed = 7;
    for (auto _ : state) {
        auto result = search(cfg);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_FiducialSearch)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
