#include <benchmark/benchmark.h>

#include <msection/chebyshev.hpp>
#include <msection/horadam.hpp>
#include <msection/multisection.hpp>
#include <msection/series.hpp>
#include <msection/vandermonde.hpp>

using namespace msection;

namespace {

void BM_master_identity(benchmark::State& state) {
    const long m = state.range(0);
    for (auto _ : state) {
        auto res = master_identity_check(m);
        benchmark::DoNotOptimize(res.ok);
    }
}
BENCHMARK(BM_master_identity)->Arg(4)->Arg(8)->Arg(12)->Arg(20);

void BM_sum_value_uncached(benchmark::State& state) {
    const long m = state.range(0);
    // vary r so the internal cache never hits
    long r = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum_value(r, 3, m));
        r = r % 4096 + 1;
    }
}
BENCHMARK(BM_sum_value_uncached)->Arg(10)->Arg(25)->Arg(50);

void BM_section_via_filter(benchmark::State& state) {
    const long m = state.range(0);
    const RationalOGF fib = ogf_h(HoradamSpec{0, 1, 1, 1});
    for (auto _ : state) {
        auto g = section_via_filter(fib, m, 0, 0);
        benchmark::DoNotOptimize(g.num);
    }
}
BENCHMARK(BM_section_via_filter)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_section_ogf_closed_form(benchmark::State& state) {
    const long m = state.range(0);
    const HoradamSpec lucas{2, 1, 1, 1};
    long l = 0;
    for (auto _ : state) {
        auto g = section_ogf_h(lucas, m, l);
        benchmark::DoNotOptimize(g.num);
        l = (l + 1) % m;
    }
}
BENCHMARK(BM_section_ogf_closed_form)->Arg(4)->Arg(8)->Arg(16);

void BM_expand_64(benchmark::State& state) {
    const RationalOGF g = section_ogf_h(HoradamSpec{0, 1, 3, 2}, 4, 1);
    for (auto _ : state) {
        auto prefix = expand(g, 64);
        benchmark::DoNotOptimize(prefix.coeffs);
    }
}
BENCHMARK(BM_expand_64);

void BM_s_poly(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        // negate the index on alternate runs to exercise the extension
        benchmark::DoNotOptimize(s_poly(n));
        benchmark::DoNotOptimize(s_poly(-n));
    }
}
BENCHMARK(BM_s_poly)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
