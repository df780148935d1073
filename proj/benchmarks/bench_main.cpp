#include <benchmark/benchmark.h>

#include "acgw/document.hpp"
#include "acgw/generators.hpp"
#include "acgw/homology_maps.hpp"
#include "acgw/les.hpp"
#include "acgw/oracle.hpp"

using namespace acgw;

namespace {

GenConfig sized(std::int64_t n) {
    GenConfig c;
    c.max_size = static_cast<std::size_t>(n);
    c.max_support = 6;
    return c;
}

void BM_SetHomology(benchmark::State& state) {
    Rng rng(1);
    const auto x = gen_complex(rng, sized(state.range(0)));
    for (auto _ : state)
        for (int i = x.lo; i <= x.hi(); ++i) benchmark::DoNotOptimize(homology_at(x, i));
}
BENCHMARK(BM_SetHomology)->Arg(8)->Arg(32)->Arg(128);

void BM_RankOracle(benchmark::State& state) {
    Rng rng(2);
    const auto x = gen_complex(rng, sized(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_homology_dims(free_complex(x)));
}
BENCHMARK(BM_RankOracle)->Arg(8)->Arg(32)->Arg(128);

void BM_LinearHomology(benchmark::State& state) {
    Rng rng(3);
    const auto x = gen_linear_complex(rng, sized(state.range(0)));
    for (auto _ : state)
        for (int i = x.lo; i <= x.hi(); ++i) benchmark::DoNotOptimize(homology_at(x, i));
}
BENCHMARK(BM_LinearHomology)->Arg(4)->Arg(8)->Arg(16);

void BM_WeakSnake(benchmark::State& state) {
    Rng rng(4);
    const auto in = gen_snake_input(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(snake_weak(in));
}
BENCHMARK(BM_WeakSnake)->Arg(6)->Arg(24);

void BM_LongExactSequence(benchmark::State& state) {
    Rng rng(5);
    const auto s = gen_ses(rng, sized(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(les_of_ses(s));
}
BENCHMARK(BM_LongExactSequence)->Arg(8)->Arg(24);

void BM_ChainMapFunctoriality(benchmark::State& state) {
    Rng rng(6);
    NameSource names("y");
    const auto x = gen_complex(rng, sized(state.range(0)));
    const auto f = gen_chain_map(rng, x, names);
    const auto g = gen_chain_map(rng, f.target, names);
    for (auto _ : state) benchmark::DoNotOptimize(check_functoriality(f, g));
}
BENCHMARK(BM_ChainMapFunctoriality)->Arg(8)->Arg(24);

void BM_DocumentRoundTrip(benchmark::State& state) {
    Rng rng(7);
    SetDocument d;
    d.complexes.emplace_back("X", gen_complex(rng, sized(state.range(0))));
    const auto text = serialize_document(Document(d));
    for (auto _ : state) benchmark::DoNotOptimize(serialize_document(parse_document(text)));
}
BENCHMARK(BM_DocumentRoundTrip)->Arg(8)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
