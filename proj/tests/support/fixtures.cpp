#include "support/fixtures.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

namespace fs = std::filesystem;

namespace testsupport {

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("fixture write failed: " + path.string());
    }
    out << content;
}

std::string two_digits(int value) {
    return (value < 10 ? "0" : "") + std::to_string(value);
}

// Shape 1, "ADJ NOUN works": adjective directly modifies the noun.
void append_attributive(std::string& out, const std::string& adj,
                        const std::string& noun) {
    out += "1\t" + adj + "\ta\t2\tATT\n";
    out += "2\t" + noun + "\tn\t3\tSBV\n";
    out += "3\tworks\tv\t0\tHED\n\n";
}

// Shape 2, "ADJ de NOUN fine": adjective reaches the noun through a
// particle, giving the two-step DE+ ATT+ path.
void append_particle(std::string& out, const std::string& adj,
                     const std::string& noun) {
    out += "1\t" + adj + "\ta\t2\tDE\n";
    out += "2\tde\tu\t3\tATT\n";
    out += "3\t" + noun + "\tn\t4\tSBV\n";
    out += "4\tfine\tv\t0\tHED\n\n";
}

// Shape 3, "NOUN seems ADJ": noun precedes the adjective; the path
// crosses the verb.
void append_predicative(std::string& out, const std::string& adj,
                        const std::string& noun) {
    out += "1\t" + noun + "\tn\t2\tSBV\n";
    out += "2\tseems\tv\t0\tHED\n";
    out += "3\t" + adj + "\ta\t2\tVOB\n\n";
}

}  // namespace

TempDir::TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device entropy;
    const unsigned stamp = counter.fetch_add(1);
    path_ = fs::temp_directory_path() /
            ("lexforge_test_" + std::to_string(entropy()) + "_" +
             std::to_string(stamp));
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

PlantedCorpus make_planted_corpus() {
    PlantedCorpus corpus;
    for (int i = 1; i <= 20; ++i) {
        const std::string word = "mark" + two_digits(i);
        if (i <= 5) {
            corpus.general.push_back(word);
        } else {
            corpus.hidden.push_back(word);
        }
    }
    for (int i = 1; i <= 5; ++i) {
        corpus.targets.push_back("item" + std::to_string(i));
    }
    for (int i = 1; i <= 30; ++i) {
        corpus.fillers.push_back("fill" + two_digits(i));
    }

    // 20 adjectives x 5 nouns x 3 shapes x 2 repetitions: every target
    // noun appears 120 times, clearing the gamma_d = 100 bar.
    std::vector<std::string> planted = corpus.general;
    planted.insert(planted.end(), corpus.hidden.begin(), corpus.hidden.end());
    for (const std::string& adj : planted) {
        for (const std::string& noun : corpus.targets) {
            for (int rep = 0; rep < 2; ++rep) {
                append_attributive(corpus.conll, adj, noun);
                append_particle(corpus.conll, adj, noun);
                append_predicative(corpus.conll, adj, noun);
            }
        }
    }
    // Fillers co-occur only with rare nouns (6 occurrences each), so no
    // filler pair can reach a target word.
    for (std::size_t i = 0; i < corpus.fillers.size(); ++i) {
        for (int rep = 0; rep < 2; ++rep) {
            const std::string noun =
                "thing" + std::to_string((2 * i + rep) % 10);
            append_attributive(corpus.conll, corpus.fillers[i], noun);
        }
    }
    return corpus;
}

std::filesystem::path write_pipeline_fixture(const std::filesystem::path& dir) {
    fs::create_directories(dir);

    write_file(dir / "comments.tsv",
               "5\tworks_v well_d\tbright_a quick_a smooth_a\tslow_a\n"
               "4\tok_v\tbright_a smooth_a topnotch_i\tdull_a\n"
               "5\t\tbright_a quick_a solid_a\tweak_a\n"
               "4\t\tbright_a smooth_a clear_a\tdull_a slow_a\n"
               "2\t\tclear_a topnotch_i\tsubpar_i weak_a\n"
               "1\t\tsmooth_a clear_a rough_a\tdull_a slow_a subpar_i\n"
               "4\t\tquick_a solid_a smooth_a\trough_a\n"
               "2\t\tslow_a\tsmooth_a clear_a\n");

    write_file(dir / "thesaurus.txt",
               "bright shiny vivid\n"
               "quick fast rapid\n"
               "smooth fluid\n"
               "dull drab\n"
               "slow sluggish\n"
               "weak feeble frail\n"
               "vivid brilliant\n"
               "fast speedy\n");

    std::string conll;
    append_attributive(conll, "bright", "phone");
    append_attributive(conll, "bright", "phone");
    append_particle(conll, "bright", "screen");
    append_attributive(conll, "smooth", "screen");
    append_attributive(conll, "smooth", "screen");
    append_predicative(conll, "dull", "phone");
    append_predicative(conll, "sluggish", "screen");
    append_attributive(conll, "crisp", "phone");
    append_particle(conll, "crisp", "phone");
    append_attributive(conll, "crisp", "screen");
    append_predicative(conll, "laggy", "phone");
    append_predicative(conll, "laggy", "screen");
    conll +=
        "1\tbattery\tn\t2\tSBV\n"
        "2\tlasts\tv\t0\tHED\n\n"
        "1\tvery\td\t2\tADV\n"
        "2\theavy\ta\t0\tHED\n\n";
    write_file(dir / "parsed.conll", conll);

    write_file(dir / "gold.lex",
               "# lexforge-lexicon v1\n"
               "bright\tpositive\t1\n"
               "crisp\tpositive\t1\n"
               "dull\tnegative\t1\n"
               "laggy\tnegative\t1\n"
               "flaky\tnegative\t1\n");

    write_file(dir / "labels.tsv",
               "bright\tpos\nshiny\tpos\nvivid\tpos\nbrilliant\tpos\n"
               "quick\tpos\nfast\tpos\nrapid\tpos\nspeedy\tpos\n"
               "smooth\tpos\nfluid\tpos\nsolid\tpos\ntopnotch\tpos\n"
               "slow\tneg\nsluggish\tneg\ndull\tneg\ndrab\tneg\n"
               "weak\tneg\nfeeble\tneg\nfrail\tneg\nsubpar\tneg\n"
               "clear\tneu\nrough\tneu\n");

    write_file(dir / "classify.tsv",
               "pos\tphone_n works_v bright_a\n"
               "pos\tscreen_n crisp_a\n"
               "neg\tphone_n laggy_a\n"
               "neg\tdull_a screen_n\n"
               "pos\tnice_a day_n\n"
               "neg\tweird_a phone_n\n");

    const std::string root = dir.string();
    write_file(dir / "lexforge.ini",
               "[paths]\n"
               "comments = " + root + "/comments.tsv\n"
               "thesaurus = " + root + "/thesaurus.txt\n"
               "parsed_corpus = " + root + "/parsed.conll\n"
               "gold_lexicon = " + root + "/gold.lex\n"
               "labeled_ranking = " + root + "/labels.tsv\n"
               "classification_dataset = " + root + "/classify.tsv\n"
               "output_dir = " + root + "/out\n"
               "\n"
               "[seeds]\n"
               "min_freq = 2\n"
               "\n"
               "[propagation]\n"
               "beta_neg = 0\n"
               "tol = 1e-10\n"
               "max_iter = 500\n"
               "top_k = 5\n"
               "\n"
               "[patterns]\n"
               "gamma_d = 2\n"
               "\n"
               "[eval]\n"
               "p_at = 5 10\n");

    return dir / "lexforge.ini";
}

lexforge::SynonymyGraph graph_from_dense(
    const std::vector<std::vector<double>>& adjacency) {
    lexforge::SynonymyGraph graph;
    const std::size_t n = adjacency.size();
    for (std::size_t i = 0; i < n; ++i) {
        graph.words.push_back("n" + two_digits(static_cast<int>(i)));
        graph.pos_tags.push_back("unknown");
    }
    graph.adjacency.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency[i][j] > 0.0) {
                graph.adjacency[i].emplace_back(static_cast<int>(j),
                                                adjacency[i][j]);
            }
        }
    }
    return graph;
}

}  // namespace testsupport
