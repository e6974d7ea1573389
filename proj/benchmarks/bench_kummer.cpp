#include <benchmark/benchmark.h>

#include "kummer/quartic.hpp"
#include "kummer/samples.hpp"
#include "kummer/verifier.hpp"

using namespace kummer;

namespace {

void BM_Factor(benchmark::State& state) {
    GaussianInt const z = pow(GaussianInt(2, 1), 7) * pow(GaussianInt(5, 4), 3) * GaussianInt(1009, 12);
    for (auto _ : state) benchmark::DoNotOptimize(factor(z));
}
BENCHMARK(BM_Factor);

void BM_CharPoly(benchmark::State& state) {
    auto const r = make_radicand(GaussianInt(-5, -2), 3, GaussianInt(1, 2));
    auto const x = build_basis(r).element(r.m(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(x));
}
BENCHMARK(BM_CharPoly);

void BM_CharPolyFaddeev(benchmark::State& state) {
    auto const r = make_radicand(GaussianInt(-5, -2), 3, GaussianInt(1, 2));
    auto const x = build_basis(r).element(r.m(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_faddeev(x));
}
BENCHMARK(BM_CharPolyFaddeev);

void BM_BuildBasis(benchmark::State& state) {
    auto const& s = case_samples().at(static_cast<std::size_t>(state.range(0)));
    auto const r = s.radicand();
    state.SetLabel(s.label());
    for (auto _ : state) benchmark::DoNotOptimize(build_basis(r));
}
BENCHMARK(BM_BuildBasis)->DenseRange(0, 30, 6)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    auto const& s = case_samples().at(static_cast<std::size_t>(state.range(0)));
    auto const r = s.radicand();
    state.SetLabel(s.label());
    for (auto _ : state) benchmark::DoNotOptimize(normalized_basis_oracle(r));
}
BENCHMARK(BM_Oracle)->DenseRange(0, 30, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
