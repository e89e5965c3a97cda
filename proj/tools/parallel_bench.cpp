// Serial reference kernels against their OpenMP versions.

#include "qsum/catalog/identity.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/core/series.hpp"

#include <benchmark/benchmark.h>

using namespace qsum;
using namespace qsum::catalog;

namespace {

constexpr std::uint64_t kSeed = 7;

SweepOptions exact_opts() { return {}; }

SweepOptions numeric_opts() {
    SweepOptions o;
    o.mode = Backend::Numeric;
    o.precision = numeric::PrecisionContext::make(60);
    return o;
}

void BM_SweepSerial(benchmark::State& st, IdentityId id, bool numeric) {
    const auto opt = numeric ? numeric_opts() : exact_opts();
    for (auto _ : st) benchmark::DoNotOptimize(sweep_random_serial(default_catalog(), id, st.range(0), kSeed, opt));
}

void BM_SweepParallel(benchmark::State& st, IdentityId id, bool numeric) {
    const auto opt = numeric ? numeric_opts() : exact_opts();
    for (auto _ : st) benchmark::DoNotOptimize(sweep_random(default_catalog(), id, st.range(0), kSeed, opt));
}

// A 3psi3 at q near the warning threshold needs many terms on both sides.
core::SeriesSpec slow_bilateral() {
    const auto ctx = numeric::PrecisionContext::make(100);
    ParamSet p;
    p.q = Param(core::HpComplex(ctx, mpq_class(7, 10)));
    p.sym['b'] = Param(core::HpComplex(ctx, mpq_class(3, 2)));
    p.sym['c'] = Param(core::HpComplex(ctx, mpq_class(-6, 5)));
    p.sym['d'] = Param(core::HpComplex(ctx, mpq_class(-5, 7)));
    const auto& cat = default_catalog();
    return cat.lhs_series(IdentityId::Thm3Psi3_A, cat.resolve_params(IdentityId::Thm3Psi3_A, p));
}

void BM_Bilateral(benchmark::State& st, bool parallel) {
    const auto spec = slow_bilateral();
    for (auto _ : st) benchmark::DoNotOptimize(core::evaluate(spec, {parallel}));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SweepSerial, thm1_1_exact, IdentityId::Thm5Psi5_A, false)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepParallel, thm1_1_exact, IdentityId::Thm5Psi5_A, false)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepSerial, eq1_10_numeric, IdentityId::Bailey6Psi6, true)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepParallel, eq1_10_numeric, IdentityId::Bailey6Psi6, true)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bilateral, serial_halves, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bilateral, parallel_halves, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
