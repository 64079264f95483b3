// Acceptance gate: ten end-to-end checks with pinned tolerances, one
// PASS/FAIL line each. The process exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexforge/corpus_io.hpp"
#include "lexforge/evaluation.hpp"
#include "lexforge/pattern_engine.hpp"
#include "lexforge/pipeline.hpp"
#include "lexforge/propagation.hpp"
#include "lexforge/seed_extraction.hpp"
#include "lexforge/synonymy_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

// 1. Seed scores reproduce the six published reference rows within 5e-4.
bool seed_score_table() {
    struct Row {
        long cp;
        long cn;
        double sps;
        double sns;
    };
    const Row rows[] = {
        {32, 0, 1.000, 0.000},     {63, 1, 0.984, 0.016},
        {6, 47, 0.113, 0.887},     {4, 30, 0.118, 0.882},
        {915, 5060, 0.153, 0.847}, {446, 2322, 0.161, 0.839},
    };
    for (const Row& row : rows) {
        const auto [sps, sns] = lexforge::score_seed(row.cp, row.cn);
        if (std::abs(sps - row.sps) > 0.0005) return false;
        if (std::abs(sns - row.sns) > 0.0005) return false;
    }
    return true;
}

// 2. sps + sns == 1 exactly for 10000 random count pairs.
bool seed_score_complement() {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<long> draw(0, 1000000);
    for (int trial = 0; trial < 10000; ++trial) {
        long cp = draw(rng);
        long cn = draw(rng);
        if (cp + cn == 0) cp = 1;
        const auto [sps, sns] = lexforge::score_seed(cp, cn);
        if (sps + sns != 1.0) return false;
        if (!(sps >= 0.0 && sps <= 1.0)) return false;
    }
    return true;
}

// 3. Power iteration matches a dense linear solve on 100 random graphs of
// up to 50 nodes, for three damping values, within 1e-8 in L1, in under
// ten seconds.
bool pagerank_dense_agreement() {
    const auto start = Clock::now();
    std::mt19937 rng(1003);
    std::uniform_int_distribution<int> size(2, 50);
    const double alphas[] = {0.1, 0.5, 0.85};

    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const auto adjacency = oracle::random_symmetric_adjacency(rng, n);
        const auto graph = testsupport::graph_from_dense(adjacency);
        const auto transition = lexforge::row_stochastic_transition(graph);
        lexforge::TeleportDistribution teleport;
        teleport.weights = oracle::random_distribution(rng, n);

        for (double alpha : alphas) {
            lexforge::PropagationConfig cfg;
            cfg.alpha = alpha;
            cfg.tol = 1e-12;
            cfg.max_iter = 5000;
            const auto rank = lexforge::pagerank(transition, teleport, cfg);
            const auto expected =
                oracle::dense_pagerank(adjacency, teleport.weights, alpha);
            if (!rank.converged) return false;
            if (l1_distance(rank.scores, expected) > 1e-8) return false;
        }
    }
    return seconds_since(start) < 10.0;
}

// 4. Every iterate is a probability distribution: 1000 forced iterations,
// each summing to 1 within 1e-9.
bool pagerank_mass_conservation() {
    std::mt19937 rng(1004);
    bool ok = true;
    long iterations_checked = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto adjacency = oracle::random_symmetric_adjacency(rng, 30);
        const auto graph = testsupport::graph_from_dense(adjacency);
        lexforge::TeleportDistribution teleport;
        teleport.weights = oracle::random_distribution(rng, 30);

        lexforge::PropagationConfig cfg;
        cfg.tol = 1e-300;  // never reached: exercise every iteration
        cfg.max_iter = 200;
        lexforge::pagerank(
            lexforge::row_stochastic_transition(graph), teleport, cfg,
            [&](int iteration, std::span<const double> iterate) {
                double sum = 0.0;
                for (double score : iterate) {
                    sum += score;
                    if (score < 0.0) ok = false;
                }
                if (std::abs(sum - 1.0) > 1e-9) ok = false;
                if (iteration > 0) ++iterations_checked;
            });
    }
    return ok && iterations_checked == 1000;
}

// 5. Mixing is exact at the endpoints and midpoint and preserves
// normalization over 1000 random combinations.
bool combine_properties() {
    std::mt19937 rng(1005);
    std::uniform_real_distribution<double> pick_beta(0.0, 1.0);

    for (int trial = 0; trial < 100; ++trial) {
        lexforge::RankVector x1, x2;
        x1.scores = oracle::random_distribution(rng, 16);
        x2.scores = oracle::random_distribution(rng, 16);
        if (lexforge::combine(x1, x2, 1.0).scores != x1.scores) return false;
        if (lexforge::combine(x1, x2, 0.0).scores != x2.scores) return false;
        const auto mid = lexforge::combine(x1, x2, 0.5);
        for (std::size_t i = 0; i < x1.scores.size(); ++i) {
            if (mid.scores[i] != 0.5 * x1.scores[i] + 0.5 * x2.scores[i])
                return false;
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        lexforge::RankVector x1, x2;
        x1.scores = oracle::random_distribution(rng, 16);
        x2.scores = oracle::random_distribution(rng, 16);
        const auto mixed = lexforge::combine(x1, x2, pick_beta(rng));
        double sum = 0.0;
        for (double score : mixed.scores) {
            if (score < 0.0) return false;
            sum += score;
        }
        if (std::abs(sum - 1.0) > 1e-12) return false;
    }
    return true;
}

// 6. Bootstrap expansion equals an independent BFS closure on 100 random
// thesauri of up to 200 words, and is idempotent.
bool bootstrap_closure() {
    std::mt19937 rng(1006);
    std::uniform_int_distribution<int> size(10, 200);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const lexforge::Thesaurus thesaurus = oracle::random_thesaurus(rng, n);
        std::set<std::string> origin;
        std::uniform_int_distribution<int> word(0, n - 1);
        std::uniform_int_distribution<int> count(1, 5);
        const int origin_size = count(rng);
        for (int i = 0; i < origin_size; ++i)
            origin.insert("w" + std::to_string(word(rng)));

        const auto closed = lexforge::bootstrap_expand(origin, thesaurus);
        if (closed != oracle::bfs_closure(origin, thesaurus)) return false;
        if (lexforge::bootstrap_expand(closed, thesaurus) != closed) return false;
    }
    return true;
}

// 7. Syntactic path length equals the BFS tree distance on 500 random
// trees, and the two-level particle construction is encoded correctly.
bool syntactic_paths() {
    std::mt19937 rng(1007);
    std::uniform_int_distribution<int> size(2, 12);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = size(rng);
        const auto sentence = oracle::random_tree_sentence(rng, n);
        std::uniform_int_distribution<int> pick(1, n);
        int s = pick(rng);
        int t = pick(rng);
        if (s == t) t = (t % n) + 1;
        const auto pattern = lexforge::syntactic_pattern(sentence, s, t);
        if (static_cast<int>(pattern.steps.size()) !=
            oracle::tree_distance(sentence, s, t))
            return false;
    }

    lexforge::ParsedSentence particle;
    particle.tokens = {{1, "bright", "a", 2, "DE"},
                       {2, "de", "u", 3, "ATT"},
                       {3, "screen", "n", 4, "SBV"},
                       {4, "fine", "v", 0, "HED"}};
    return lexforge::syntactic_pattern(particle, 1, 3).canonical() ==
           "(S) DE+ ATT+ (T)";
}

// 8. Recovery on a corpus with planted sentiment words: at least 14 of 15
// hidden words extracted, no filler extracted, in under five seconds.
bool planted_recovery() {
    const auto start = Clock::now();
    const testsupport::PlantedCorpus planted = testsupport::make_planted_corpus();

    std::istringstream in(planted.conll);
    const auto parsed = lexforge::parse_parsed_corpus(in);
    if (!parsed.clean()) return false;

    lexforge::Lexicon general;
    for (std::size_t i = 0; i < planted.general.size(); ++i) {
        general.entries.push_back({planted.general[i],
                                   i < 3 ? lexforge::Polarity::positive
                                         : lexforge::Polarity::negative,
                                   1.0});
    }

    const auto targets = lexforge::extract_targets(parsed.value, 100);
    if (targets.words.size() != planted.targets.size()) return false;
    const auto library =
        lexforge::build_pattern_library(parsed.value, general, targets, 200,
                                        200, 10);
    const auto extraction = lexforge::extract_dssw(parsed.value, library,
                                                   targets, general);

    int recovered = 0;
    for (const std::string& word : planted.hidden)
        if (extraction.dssw.contains(word)) ++recovered;
    for (const std::string& word : planted.fillers)
        if (extraction.dssw.contains(word)) return false;

    return recovered >= 14 && seconds_since(start) < 5.0;
}

// 9. The precision/recall/F1 metric reproduces nine reference cells within
// 1.5e-3 on synthetic sets built to those rates.
bool metric_reference_cells() {
    struct Cell {
        double precision;
        double recall;
        double f1;
    };
    const Cell cells[] = {
        {0.5423, 0.2956, 0.3826}, {0.5404, 0.3118, 0.3955},
        {0.6347, 0.3411, 0.4437}, {0.5626, 0.2769, 0.3711},
        {0.5878, 0.3022, 0.3992}, {0.6449, 0.3256, 0.4328},
        {0.5534, 0.3043, 0.3927}, {0.5649, 0.3253, 0.4129},
        {0.5923, 0.3457, 0.4366},
    };
    const long extracted_size = 10000;
    for (const Cell& cell : cells) {
        const long hits =
            std::lround(cell.precision * static_cast<double>(extracted_size));
        const long gold_size =
            std::lround(static_cast<double>(hits) / cell.recall);

        std::set<std::string> extracted, gold;
        for (long i = 0; i < extracted_size; ++i)
            extracted.insert("e" + std::to_string(i));
        for (long i = 0; i < hits; ++i) gold.insert("e" + std::to_string(i));
        for (long i = hits; i < gold_size; ++i)
            gold.insert("g" + std::to_string(i));

        const lexforge::Prf result = lexforge::prf1(extracted, gold);
        if (std::abs(result.precision - cell.precision) > 0.0015) return false;
        if (std::abs(result.recall - cell.recall) > 0.0015) return false;
        if (std::abs(result.f1 - cell.f1) > 0.0015) return false;
    }
    return true;
}

// 10. Two full pipeline runs over the same inputs produce byte-identical
// artifacts.
bool pipeline_determinism() {
    const testsupport::TempDir dir;
    const auto config_path = testsupport::write_pipeline_fixture(dir.path());

    auto run_all = [&](const char* out_name) {
        lexforge::PipelineConfig cfg = lexforge::load_config(config_path);
        cfg.paths.output_dir = dir.path() / out_name;
        std::ostringstream log;
        lexforge::run_seeds(cfg, log);
        lexforge::run_expand(cfg, log);
        lexforge::run_extract(cfg, log);
        lexforge::run_eval(cfg, log);
        return cfg.paths.output_dir;
    };
    const auto dir_a = run_all("out_a");
    const auto dir_b = run_all("out_b");

    auto slurp = [](const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    const char* names[] = {
        lexforge::artifact::seeds_positive,  lexforge::artifact::seeds_negative,
        lexforge::artifact::seed_candidates, lexforge::artifact::seeds_report,
        lexforge::artifact::graph_dump,      lexforge::artifact::rank_positive,
        lexforge::artifact::rank_negative,   lexforge::artifact::general_lexicon,
        lexforge::artifact::expand_report,   lexforge::artifact::pattern_library,
        lexforge::artifact::dssw_lexicon,    lexforge::artifact::extract_report,
        lexforge::artifact::eval_report,
    };
    for (const char* name : names) {
        const std::string a = slurp(dir_a / name);
        if (a.empty() || a != slurp(dir_b / name)) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* description;
        bool (*check)();
    };
    const Criterion criteria[] = {
        {"seed scores match the reference table within 5e-4", seed_score_table},
        {"positive and negative seed scores sum to 1 exactly",
         seed_score_complement},
        {"propagation matches a dense solve within 1e-8 L1",
         pagerank_dense_agreement},
        {"every propagation iterate keeps unit mass within 1e-9",
         pagerank_mass_conservation},
        {"rank mixing is exact at endpoints and stays normalized",
         combine_properties},
        {"bootstrap expansion equals the BFS synonym closure",
         bootstrap_closure},
        {"syntactic paths have tree-distance length and correct encoding",
         syntactic_paths},
        {"planted sentiment words are recovered without false positives",
         planted_recovery},
        {"evaluation metrics reproduce nine reference cells within 1.5e-3",
         metric_reference_cells},
        {"repeated pipeline runs emit byte-identical artifacts",
         pipeline_determinism},
    };

    int failures = 0;
    int number = 0;
    for (const Criterion& criterion : criteria) {
        ++number;
        bool pass = false;
        try {
            pass = criterion.check();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
        }
        std::printf("criterion %2d: %s  %s\n", number, pass ? "PASS" : "FAIL",
                    criterion.description);
        if (!pass) ++failures;
    }
    return failures;
}
