#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <string>

#include "lexforge/propagation.hpp"
#include "lexforge/synonymy_graph.hpp"

namespace {

std::string word_name(int i) {
    char buffer[8];
    std::snprintf(buffer, sizeof(buffer), "w%05d", i);
    return buffer;
}

// Sparse random thesaurus: ~4 synonym mentions per word.
lexforge::Thesaurus random_thesaurus(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    lexforge::Thesaurus thesaurus;
    for (int i = 0; i < n; ++i) {
        auto& synonyms = thesaurus.entries[word_name(i)];
        for (int j = 0; j < 4; ++j) {
            const int other = pick(rng);
            if (other != i) synonyms.insert(word_name(other));
        }
    }
    return thesaurus;
}

void BM_pagerank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto thesaurus = random_thesaurus(n, 42);
    std::set<std::string> vocab;
    for (int i = 0; i < n; ++i) vocab.insert(word_name(i));
    const auto graph = lexforge::build_graph(vocab, thesaurus);
    const auto transition = lexforge::row_stochastic_transition(graph);

    lexforge::TeleportDistribution teleport;
    teleport.weights.assign(graph.node_count(), 1.0 / graph.node_count());
    lexforge::PropagationConfig cfg;
    cfg.tol = 1e-10;
    cfg.max_iter = 500;

    for (auto _ : state) {
        auto rank = lexforge::pagerank(transition, teleport, cfg);
        benchmark::DoNotOptimize(rank.scores.data());
    }
    state.SetComplexityN(n);
}

void BM_build_graph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto thesaurus = random_thesaurus(n, 42);
    std::set<std::string> vocab;
    for (int i = 0; i < n; ++i) vocab.insert(word_name(i));

    for (auto _ : state) {
        auto graph = lexforge::build_graph(vocab, thesaurus);
        benchmark::DoNotOptimize(graph.adjacency.data());
    }
    state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_pagerank)->Range(256, 4096)->Complexity();
BENCHMARK(BM_build_graph)->Range(256, 2048)->Complexity();

BENCHMARK_MAIN();
