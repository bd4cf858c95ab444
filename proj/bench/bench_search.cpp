// Serial reference against the OpenMP kernels. The argument is the thread count; 1 is serial.

#include "support/reference.hpp"

#include <magus/census.hpp>
#include <magus/graph6.hpp>
#include <magus/mycielskian.hpp>
#include <magus/search.hpp>

#include <benchmark/benchmark.h>

using namespace magus;

namespace
{
    void search(benchmark::State & state, const Graph & g)
    {
        SearchOptions options;
        options.threads = static_cast<unsigned>(state.range(0));
        std::uint64_t nodes = 0;
        for (auto _ : state) {
            auto outcome = search_labeling(g, {}, options);
            nodes = std::visit([] (auto & o) { return o.nodes; }, outcome);
            benchmark::DoNotOptimize(outcome);
        }
        state.counters["nodes"] = static_cast<double>(nodes);
    }

    void search_c4_t4(benchmark::State & state)
    {
        static const auto g = build_mycielskian(generate(FamilySpec::cycle(4)), 4).graph();
        search(state, g);
    }

    void search_k22_t4(benchmark::State & state)
    {
        static const auto g = build_mycielskian(generate(FamilySpec::complete_bipartite(2, 2)), 4).graph();
        search(state, g);
    }

    void search_p4_t2_no_pruning(benchmark::State & state)
    {
        static const auto g = build_mycielskian(generate(FamilySpec::path(4)), 2).graph();
        SearchOptions options;
        options.threads = static_cast<unsigned>(state.range(0));
        options.pruning = false;
        for (auto _ : state)
            benchmark::DoNotOptimize(search_labeling(g, {}, options));
    }

    void enumerate_c4_t2(benchmark::State & state)
    {
        static const auto g = build_mycielskian(generate(FamilySpec::cycle(4)), 2).graph();
        for (auto _ : state)
            benchmark::DoNotOptimize(reference::magic_constants(g, static_cast<int>(state.range(0))));
    }

    void census_catalog(benchmark::State & state)
    {
        std::vector<std::string> lines;
        for (auto & g : reference::connected_catalog(5))
            lines.push_back(write_graph6(g));
        CensusOptions options;
        options.workers = static_cast<unsigned>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(run_census(lines, options));
    }
}

BENCHMARK(search_c4_t4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(search_k22_t4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(search_p4_t2_no_pruning)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_c4_t2)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(census_catalog)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
