#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "lexforge/corpus_io.hpp"

namespace {

std::string synthetic_comments(int lines) {
    std::string text;
    text.reserve(static_cast<std::size_t>(lines) * 64);
    for (int i = 0; i < lines; ++i) {
        text += std::to_string(1 + i % 5);
        text += "\tworks_v well_d\tbright_a quick_a smooth_a\tslow_a dull_a\n";
    }
    return text;
}

void BM_parse_comments(benchmark::State& state) {
    const std::string text = synthetic_comments(static_cast<int>(state.range(0)));

    for (auto _ : state) {
        std::istringstream in(text);
        auto parsed = lexforge::parse_comments(in);
        benchmark::DoNotOptimize(parsed.value.data());
    }
    state.SetBytesProcessed(state.iterations() *
                            static_cast<int64_t>(text.size()));
}

}  // namespace

BENCHMARK(BM_parse_comments)->Range(1024, 65536);

BENCHMARK_MAIN();
