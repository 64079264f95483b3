#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lexforge/corpus_io.hpp"
#include "lexforge/pattern_engine.hpp"

namespace {

// Alternating attributive / predicative shapes over a small vocabulary so
// every sentence pairs a known adjective with a frequent target noun.
std::vector<lexforge::ParsedSentence> synthetic_corpus(int sentences) {
    const char* adjectives[] = {"good", "bad", "fine", "poor", "crisp", "dull"};
    const char* nouns[] = {"phone", "screen", "battery"};
    std::vector<lexforge::ParsedSentence> corpus;
    corpus.reserve(sentences);
    for (int i = 0; i < sentences; ++i) {
        const std::string adj = adjectives[i % 6];
        const std::string noun = nouns[i % 3];
        lexforge::ParsedSentence sentence;
        if (i % 2 == 0) {
            sentence.tokens = {{1, adj, "a", 2, "ATT"},
                               {2, noun, "n", 3, "SBV"},
                               {3, "works", "v", 0, "HED"}};
        } else {
            sentence.tokens = {{1, noun, "n", 2, "SBV"},
                               {2, "seems", "v", 0, "HED"},
                               {3, adj, "a", 2, "VOB"}};
        }
        corpus.push_back(std::move(sentence));
    }
    return corpus;
}

lexforge::Lexicon general_lexicon() {
    lexforge::Lexicon general;
    general.entries = {{"good", lexforge::Polarity::positive, 1.0},
                       {"fine", lexforge::Polarity::positive, 1.0},
                       {"bad", lexforge::Polarity::negative, 1.0},
                       {"poor", lexforge::Polarity::negative, 1.0}};
    return general;
}

void BM_build_pattern_library(benchmark::State& state) {
    const auto corpus = synthetic_corpus(static_cast<int>(state.range(0)));
    const auto general = general_lexicon();
    const auto targets = lexforge::extract_targets(corpus, 10);

    for (auto _ : state) {
        auto library =
            lexforge::build_pattern_library(corpus, general, targets, 200, 200, 10);
        benchmark::DoNotOptimize(library.syntactic.data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_extract_dssw(benchmark::State& state) {
    const auto corpus = synthetic_corpus(static_cast<int>(state.range(0)));
    const auto general = general_lexicon();
    const auto targets = lexforge::extract_targets(corpus, 10);
    const auto library =
        lexforge::build_pattern_library(corpus, general, targets, 200, 200, 10);

    for (auto _ : state) {
        auto extraction =
            lexforge::extract_dssw(corpus, library, targets, general);
        benchmark::DoNotOptimize(extraction.dssw.entries.data());
    }
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_build_pattern_library)->Range(1024, 65536)->Complexity();
BENCHMARK(BM_extract_dssw)->Range(1024, 65536)->Complexity();

BENCHMARK_MAIN();
