#include "g2/analytic.hpp"
#include "g2/family.hpp"
#include "g2/points.hpp"

#include <benchmark/benchmark.h>

using namespace g2;

namespace {

const RiemannData& riemann() {
    static const auto rd = compute_periods(make_curve(0, 1, 1, 1), 256);
    return rd;
}

CVec2 probe(mpfr_prec_t prec) {
    CVec2 z;
    z[0] = Complex::with_prec(0.13, -0.07, prec);
    z[1] = Complex::with_prec(-0.21, 0.05, prec);
    return z;
}

void BM_theta_parallel(benchmark::State& st) {
    const auto& rd = riemann();
    auto z = probe(256);
    PrecisionScope ps(256);
    for (auto _ : st) benchmark::DoNotOptimize(theta(all_characteristics()[1], z, rd.tau, 256));
}

void BM_theta_serial(benchmark::State& st) {
    const auto& rd = riemann();
    auto z = probe(256);
    PrecisionScope ps(256);
    for (auto _ : st) benchmark::DoNotOptimize(theta_reference(all_characteristics()[1], z, rd.tau, 256));
}

void BM_family_count_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(count_family_parallel(static_cast<double>(st.range(0))));
}

void BM_family_count_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(count_family_reference(static_cast<double>(st.range(0))));
}

void BM_search_sieved(benchmark::State& st) {
    auto c = make_curve(-3, 8, -58, 117);
    for (auto _ : st) benchmark::DoNotOptimize(search_points(c, st.range(0), 200));
}

void BM_search_brute_force(benchmark::State& st) {
    auto c = make_curve(-3, 8, -58, 117);
    for (auto _ : st) benchmark::DoNotOptimize(search_points_reference(c, st.range(0), 200));
}

}  // namespace

BENCHMARK(BM_theta_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_family_count_parallel)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_family_count_serial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_sieved)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_brute_force)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
