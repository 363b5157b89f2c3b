#include <benchmark/benchmark.h>

#include "epscan/charpoly.hpp"
#include "epscan/family.hpp"
#include "epscan/roots.hpp"
#include "epscan/spectral.hpp"
#include "epscan/sweep.hpp"
#include "epscan/symmetry.hpp"

using namespace epscan;

namespace {

// Tight-binding ring of n sites with a gain/loss pair on sites 0 and n/2.
AffineFamily ring(std::size_t n) {
    Matrix<Rational> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, (i + 1) % n) = 1;
        a((i + 1) % n, i) = 1;
    }
    b(0, 0) = 1;
    b(n / 2, n / 2) = -1;
    return AffineFamily(a, b, "ring");
}

// Ring with a graded on-site potential: no symmetry, isolated collisions.
AffineFamily graded_ring(std::size_t n) {
    AffineFamily r = ring(n);
    Matrix<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = Rational(static_cast<long>(i * i + 1), 3);
    return AffineFamily(r.constant_part(), b, "graded");
}

void BM_CharPoly(benchmark::State& state) {
    const auto m = ring(static_cast<std::size_t>(state.range(0))).at(Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 8, 2);

void BM_DiscriminantAndIsolation(benchmark::State& state) {
    const auto fam = graded_ring(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const RatPoly disc = discriminant_in_beta(char_poly_family(fam));
        benchmark::DoNotOptimize(isolate_real_roots(disc));
    }
}
BENCHMARK(BM_DiscriminantAndIsolation)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AnalyzePaperFamily(benchmark::State& state) {
    const auto m = AffineFamily::paper().at(Rational(-5, 4));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(m));
}
BENCHMARK(BM_AnalyzePaperFamily);

void BM_AnalyzeRing(benchmark::State& state) {
    const auto m = ring(static_cast<std::size_t>(state.range(0))).at(Rational(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(m));
}
BENCHMARK(BM_AnalyzeRing)->Arg(4)->Arg(8);

void BM_InvarianceGroup(benchmark::State& state) {
    const auto m = ring(8).at(0);
    for (auto _ : state) benchmark::DoNotOptimize(invariance_group(m));
}
BENCHMARK(BM_InvarianceGroup)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    const auto fam = AffineFamily::paper();
    for (auto _ : state) benchmark::DoNotOptimize(sweep(fam, -2.0, 2.0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
