/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/dnf.hh>
#include <indsat/pattern_detect.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace indsat;

namespace
{
    auto random_trigraph(std::mt19937_64 & rng, int n) -> Trigraph
    {
        Trigraph t(n);
        std::uniform_int_distribution<int> colour(0, 2);
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u)
                t.set_color(u, v, EdgeColor(colour(rng)));
        return t;
    }

    auto bm_is_indsat_tn(benchmark::State & state)
    {
        auto t = construct_tn(int(state.range(0))).trigraph;
        auto p4 = path_pattern(4);
        for (auto _ : state)
            benchmark::DoNotOptimize(is_indsat(t, p4));
    }

    auto bm_realization_p4(benchmark::State & state)
    {
        std::mt19937_64 rng(1);
        std::vector<Trigraph> corpus;
        for (int i = 0 ; i < 256 ; ++i)
            corpus.push_back(random_trigraph(rng, int(state.range(0))));
        auto p4 = path_pattern(4);
        std::size_t i = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(has_realization_of(corpus[i++ % corpus.size()], p4));
    }

    auto bm_realization_generic_c4(benchmark::State & state)
    {
        std::mt19937_64 rng(2);
        std::vector<Trigraph> corpus;
        for (int i = 0 ; i < 256 ; ++i)
            corpus.push_back(random_trigraph(rng, int(state.range(0))));
        auto c4 = cycle_pattern(4);
        std::size_t i = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(has_realization_of(corpus[i++ % corpus.size()], c4));
    }

    auto bm_realization_brute(benchmark::State & state)
    {
        std::mt19937_64 rng(3);
        std::vector<Trigraph> corpus;
        for (int i = 0 ; i < 256 ; ++i)
            corpus.push_back(random_trigraph(rng, 6));
        auto p4 = path_pattern(4);
        std::size_t i = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(has_realization_brute(corpus[i++ % corpus.size()], p4));
    }

    auto bm_canonical_form(benchmark::State & state)
    {
        std::mt19937_64 rng(4);
        auto t = random_trigraph(rng, int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(canonical_form(t));
    }

    auto bm_isat_min_p4(benchmark::State & state)
    {
        auto p4 = path_pattern(4);
        SearchOptions o;
        o.workers = int(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(isat_min(int(state.range(0)), p4, o));
    }

    auto bm_isat_min_seen_set(benchmark::State & state)
    {
        auto p4 = path_pattern(4);
        SearchOptions o;
        o.dedup = DedupStrategy::SeenSet;
        for (auto _ : state)
            benchmark::DoNotOptimize(isat_min(int(state.range(0)), p4, o));
    }

    auto bm_min_unassigned(benchmark::State & state)
    {
        auto f = encode_pattern(5, path_pattern(4));
        for (auto _ : state)
            benchmark::DoNotOptimize(min_unassigned(f, 10));
    }
}

BENCHMARK(bm_is_indsat_tn)->Arg(10)->Arg(20)->Arg(40)->Arg(64);
BENCHMARK(bm_realization_p4)->Arg(6)->Arg(12)->Arg(24);
BENCHMARK(bm_realization_generic_c4)->Arg(6)->Arg(12);
BENCHMARK(bm_realization_brute);
BENCHMARK(bm_canonical_form)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_isat_min_p4)->Args({ 5, 1 })->Args({ 6, 1 })->Args({ 6, 4 })->Args({ 7, 4 })->Unit(benchmark::kMillisecond);
BENCHMARK(bm_isat_min_seen_set)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_min_unassigned)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
