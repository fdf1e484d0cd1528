#include <benchmark/benchmark.h>

#include "tcss/cobar.hpp"
#include "tcss/descent.hpp"
#include "tcss/pd.hpp"
#include "tcss/specseq.hpp"

using namespace tcss;

static void bm_pd_mul(benchmark::State& state) {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 8);
    PDContext ctx(K, int(state.range(0)), 8);
    PDElement h = ctx.h();
    for (auto _ : state) benchmark::DoNotOptimize(ctx.mul(h, h));
}
BENCHMARK(bm_pd_mul)->Arg(9)->Arg(27);

static void bm_delta_iterate(benchmark::State& state) {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 8);
    for (auto _ : state) {
        PDContext ctx(K, 9, 6);
        benchmark::DoNotOptimize(pd_f_seq(ctx, 1));
    }
}
BENCHMARK(bm_delta_iterate);

static void bm_cobar_rank_degree24(benchmark::State& state) {
    LocalField K = LocalField::make_simple(3, 2, 2, 1, 6);
    CobarComplex cx = CobarComplex::for_field(K, CobarFlavor::thh_mod_p);
    for (auto _ : state) benchmark::DoNotOptimize(cx.cohomology_dims(12));
}
BENCHMARK(bm_cobar_rank_degree24);

static void bm_page_run(benchmark::State& state) {
    LocalField K = LocalField::make_simple(5, 4, 1, 1, 6);
    for (auto _ : state)
        for (int j = -3; j <= 6; ++j)
            benchmark::DoNotOptimize(run_to_infinity(K, seed_page(K, j, 200, PageVariant::tp)));
}
BENCHMARK(bm_page_run);

static void bm_h90_exhaustive(benchmark::State& state) {
    FieldCtx k(3, 4); // order 81
    for (auto _ : state) {
        for (int64_t bi = 1; bi < k.order(); ++bi)
            benchmark::DoNotOptimize(h90_solve(k, k.from_index(bi), k.one()));
    }
}
BENCHMARK(bm_h90_exhaustive);

BENCHMARK_MAIN();
