#include <benchmark/benchmark.h>

#include "sinesync/coincidence.hpp"
#include "sinesync/commands.hpp"
#include "sinesync/consonance.hpp"
#include "sinesync/scales.hpp"

using namespace sinesync;

namespace {

void BM_DetectCoincidences(benchmark::State& state) {
    double horizon = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto dyad = detect_coincidences(73.42, 110.0, kDefaultTolerance, horizon);
        benchmark::DoNotOptimize(dyad.events.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetectCoincidences)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_ChromaticTable(benchmark::State& state) {
    NoteName tonic{PitchClass::d, 2};
    for (auto _ : state) {
        auto report = coincidence_table_report(tonic, kDefaultTolerance, kDefaultHorizon);
        benchmark::DoNotOptimize(report.rows.data());
    }
}
BENCHMARK(BM_ChromaticTable);

void BM_ClassifyDifferences(benchmark::State& state) {
    auto dyad = detect_coincidences(73.42, 82.41, 4e-4, kDefaultHorizon);
    for (auto _ : state) {
        auto pattern = classify_differences(dyad);
        benchmark::DoNotOptimize(pattern.kind);
    }
}
BENCHMARK(BM_ClassifyDifferences);

void BM_RankTriads(benchmark::State& state) {
    NoteIndex root{18};
    for (auto _ : state) {
        auto ranked = rank_triads(root, canonical_triad_qualities(), kDefaultTolerance,
                                  kDefaultAgreement, kDefaultHorizon);
        benchmark::DoNotOptimize(ranked.data());
    }
}
BENCHMARK(BM_RankTriads);

void BM_EnumerateScales(benchmark::State& state) {
    for (auto _ : state) {
        auto patterns = enumerate_symmetric_scales();
        benchmark::DoNotOptimize(patterns.data());
    }
}
BENCHMARK(BM_EnumerateScales);

void BM_RenderTablesAsJson(benchmark::State& state) {
    NoteName tonic{PitchClass::d, 2};
    auto report = coincidence_table_report(tonic, kDefaultTolerance, kDefaultHorizon);
    for (auto _ : state) {
        auto text = to_json(report);
        benchmark::DoNotOptimize(text.data());
    }
}
BENCHMARK(BM_RenderTablesAsJson);

}  // namespace

BENCHMARK_MAIN();
