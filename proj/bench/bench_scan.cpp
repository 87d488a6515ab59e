// Serial reference scan against the OpenMP scan, plus the exact kernels it runs per graph.
#include "cospec/canonical.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/exact.hpp"
#include "cospec/search.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace cospec;

namespace {

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> lines = [] {
        std::vector<std::string> out;
        for (int n = 1; n <= 7; ++n) {
            std::ifstream in(std::string(COSPEC_DATA_DIR) + "/corpus/graphs" + std::to_string(n) + ".g6");
            std::ostringstream s;
            s << in.rdbuf();
            for (auto& line : split_lines(s.str()))
                out.push_back(std::move(line));
        }
        return out;
    }();
    return lines;
}

const std::vector<Graph>& random_graphs() {
    static const std::vector<Graph> graphs = [] {
        Rng rng(1);
        std::vector<Graph> out;
        for (int i = 0; i < 256; ++i)
            out.push_back(random_graph(rng, 10));
        return out;
    }();
    return graphs;
}

void BM_ScanReference(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_reference(corpus()));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}

void BM_ScanParallel(benchmark::State& state) {
    const ScanOptions options{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(scan(corpus(), options));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}

void BM_CharPoly(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(char_poly(random_graphs()[i++ % random_graphs().size()]));
}

void BM_SquaredCharPoly(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(squared_char_poly(random_graphs()[i++ % random_graphs().size()]));
}

void BM_CanonicalForm(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(random_graphs()[i++ % random_graphs().size()]));
}

} // namespace

BENCHMARK(BM_ScanReference)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CharPoly);
BENCHMARK(BM_SquaredCharPoly);
BENCHMARK(BM_CanonicalForm);

BENCHMARK_MAIN();
