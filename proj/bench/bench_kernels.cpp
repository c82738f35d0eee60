#include "kato/reciprocity.hpp"

#include <benchmark/benchmark.h>

using namespace kato;

namespace {

QExpansion dense(long den, long seed, const Q &prec) {
    QExpansion f(den, prec);
    for (long e = 0; qmake(e, den) < prec; ++e) f.add_key(e, CycNumber::zeta(5, (e * seed) % 5) * qmake(e + seed, 7));
    return f;
}

void BM_qexp_mul_serial(benchmark::State &st) {
    QExpansion f = dense(5, 1, Q(st.range(0))), g = dense(5, 2, Q(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qexp_mul_serial(f, g));
}

void BM_qexp_mul_parallel(benchmark::State &st) {
    QExpansion f = dense(5, 1, Q(st.range(0))), g = dense(5, 2, Q(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qexp_mul_parallel(f, g));
}

void BM_level_sum_serial(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(level_sum_serial(7, 1, 1, 5, 5, st.range(0), 1, 0, 2));
}

void BM_level_sum_parallel(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(level_sum(7, 1, 1, 5, 5, st.range(0), 1, 0, 2));
}

}  // namespace

BENCHMARK(BM_qexp_mul_serial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_qexp_mul_parallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_level_sum_serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_level_sum_parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
