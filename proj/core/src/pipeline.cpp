#include "lexforge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexforge/evaluation.hpp"
#include "lexforge/pattern_engine.hpp"
#include "lexforge/propagation.hpp"
#include "lexforge/synonymy_graph.hpp"
#include "line_parsing.hpp"

namespace fs = std::filesystem;

namespace lexforge {

namespace {

using detail::next_line;
using detail::parse_number;
using detail::split_spaces;
using detail::split_tabs;

std::string trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t");
    return std::string(text.substr(begin, end - begin + 1));
}

std::set<std::string> parse_tag_set(const std::string& value) {
    std::set<std::string> tags;
    for (std::string_view part : split_spaces(value)) {
        tags.emplace(part);
    }
    return tags;
}

template <class Number>
Number numeric_value(const std::string& section, const std::string& key,
                     std::string_view value) {
    Number number{};
    if (!parse_number(value, number)) {
        throw config_error("invalid value for '" + section + "." + key + "': " +
                           std::string(value));
    }
    return number;
}

void set_paths_value(PipelineConfig& cfg, const std::string& key,
                     const std::string& value) {
    if (key == "comments") {
        cfg.paths.comments = value;
    } else if (key == "thesaurus") {
        cfg.paths.thesaurus = value;
    } else if (key == "parsed_corpus") {
        cfg.paths.parsed_corpus = value;
    } else if (key == "gold_lexicon") {
        cfg.paths.gold_lexicon = value;
    } else if (key == "classification_dataset") {
        cfg.paths.classification_dataset = value;
    } else if (key == "labeled_ranking") {
        cfg.paths.labeled_ranking = value;
    } else if (key == "output_dir") {
        cfg.paths.output_dir = value;
    } else {
        throw config_error("unknown config key 'paths." + key + "'");
    }
}

void set_seeds_value(PipelineConfig& cfg, const std::string& key,
                     const std::string& value) {
    if (key == "lambda_p") {
        cfg.seeds.lambda_p = numeric_value<double>("seeds", key, value);
    } else if (key == "lambda_n") {
        cfg.seeds.lambda_n = numeric_value<double>("seeds", key, value);
    } else if (key == "min_freq") {
        cfg.seeds.min_freq = numeric_value<long>("seeds", key, value);
    } else if (key == "min_len") {
        cfg.seeds.min_len = numeric_value<int>("seeds", key, value);
    } else if (key == "pos_tags") {
        cfg.seeds.seed_pos_tags = parse_tag_set(value);
    } else {
        throw config_error("unknown config key 'seeds." + key + "'");
    }
}

void set_propagation_value(PipelineConfig& cfg, const std::string& key,
                           const std::string& value) {
    if (key == "alpha") {
        cfg.propagation.alpha = numeric_value<double>("propagation", key, value);
    } else if (key == "beta_pos") {
        cfg.propagation.beta_pos = numeric_value<double>("propagation", key, value);
    } else if (key == "beta_neg") {
        cfg.propagation.beta_neg = numeric_value<double>("propagation", key, value);
    } else if (key == "tol") {
        cfg.propagation.tol = numeric_value<double>("propagation", key, value);
    } else if (key == "max_iter") {
        cfg.propagation.max_iter = numeric_value<int>("propagation", key, value);
    } else if (key == "top_k") {
        cfg.propagation.top_k = numeric_value<int>("propagation", key, value);
    } else if (key == "pos_topic_tags") {
        cfg.propagation.pos_topic_tags = parse_tag_set(value);
    } else if (key == "neg_topic_tags") {
        cfg.propagation.neg_topic_tags = parse_tag_set(value);
    } else if (key == "exclusions") {
        cfg.propagation.exclusions = parse_tag_set(value);
    } else if (key == "origin") {
        cfg.propagation.origin = trim(value);
    } else {
        throw config_error("unknown config key 'propagation." + key + "'");
    }
}

void set_patterns_value(PipelineConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "gamma_d") {
        cfg.patterns.gamma_d = numeric_value<long>("patterns", key, value);
    } else if (key == "tau_syn") {
        cfg.patterns.tau_syn = numeric_value<long>("patterns", key, value);
    } else if (key == "tau_seq") {
        cfg.patterns.tau_seq = numeric_value<long>("patterns", key, value);
    } else if (key == "max_gap") {
        cfg.patterns.max_gap = numeric_value<int>("patterns", key, value);
    } else if (key == "min_matches") {
        cfg.patterns.min_matches = numeric_value<long>("patterns", key, value);
    } else if (key == "noun_tags") {
        cfg.patterns.noun_tags = parse_tag_set(value);
    } else if (key == "candidate_tags") {
        cfg.patterns.candidate_tags = parse_tag_set(value);
    } else {
        throw config_error("unknown config key 'patterns." + key + "'");
    }
}

void set_eval_value(PipelineConfig& cfg, const std::string& key,
                    const std::string& value) {
    if (key == "p_at") {
        std::vector<int> cutoffs;
        for (std::string_view part : split_spaces(value)) {
            cutoffs.push_back(numeric_value<int>("eval", key, part));
        }
        cfg.eval.p_at = std::move(cutoffs);
    } else {
        throw config_error("unknown config key 'eval." + key + "'");
    }
}

void set_value(PipelineConfig& cfg, const std::string& section,
               const std::string& key, const std::string& value) {
    if (section == "paths") {
        set_paths_value(cfg, key, value);
    } else if (section == "seeds") {
        set_seeds_value(cfg, key, value);
    } else if (section == "propagation") {
        set_propagation_value(cfg, key, value);
    } else if (section == "patterns") {
        set_patterns_value(cfg, key, value);
    } else if (section == "eval") {
        set_eval_value(cfg, key, value);
    } else {
        throw config_error("unknown config section '" + section + "'");
    }
}

void require_input(const fs::path& path, const char* key) {
    if (path.empty()) {
        throw config_error(std::string(key) + " is required for this stage");
    }
    if (!fs::exists(path)) {
        throw config_error(std::string(key) + " does not exist: " + path.string());
    }
}

std::ifstream open_input(const fs::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error(std::string("cannot read ") + what + ": " +
                          path.string());
    }
    return in;
}

fs::path prepare_output_dir(const PipelineConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.paths.output_dir, ec);
    if (ec) {
        throw stage_error("cannot create output directory: " +
                          cfg.paths.output_dir.string());
    }
    return cfg.paths.output_dir;
}

void write_artifact(const fs::path& dir, const char* name,
                    const std::function<void(std::ostream&)>& writer) {
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw stage_error("cannot write " + path.string());
    }
    writer(out);
    out.flush();
    if (!out) {
        throw stage_error("write failed for " + path.string());
    }
}

// Metric rows for the per-stage report files.
class Report {
public:
    void add(const std::string& name, long value) {
        rows_.emplace_back(name, std::to_string(value));
    }
    void add(const std::string& name, double value) {
        rows_.emplace_back(name, format_double(value));
    }
    void write(std::ostream& out) const {
        out << "# lexforge-report v1\n";
        for (const auto& [name, value] : rows_) {
            out << name << '\t' << value << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

void log_diagnostics(std::ostream& log, const char* stage, const char* input,
                     const std::vector<ParseDiagnostic>& diagnostics) {
    constexpr std::size_t kShown = 5;
    for (std::size_t i = 0; i < diagnostics.size() && i < kShown; ++i) {
        log << stage << ": " << input << " line " << diagnostics[i].line << ": "
            << diagnostics[i].message << '\n';
    }
    if (diagnostics.size() > kShown) {
        log << stage << ": ... and " << diagnostics.size() - kShown
            << " more problems in " << input << '\n';
    }
}

Lexicon read_lexicon_artifact(const fs::path& dir, const char* name,
                              const char* producer, const char* stage,
                              std::ostream& log) {
    const fs::path path = dir / name;
    if (!fs::exists(path)) {
        throw config_error(std::string(name) +
                           " not found in the output directory; run the " +
                           producer + " stage first");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot read " + path.string());
    }
    auto parsed = read_lexicon(in);
    log_diagnostics(log, stage, name, parsed.diagnostics);
    return std::move(parsed.value);
}

std::vector<std::string> read_rank_words(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot read " + path.string());
    }
    std::vector<std::string> words;
    std::string line;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::vector<std::string_view> fields = split_tabs(line);
        if (fields.size() != 3 || fields[0].empty()) {
            throw input_error("malformed rank dump row at line " +
                              std::to_string(line_number) + " of " +
                              path.string());
        }
        words.push_back(std::string(fields[0]));
    }
    return words;
}

}  // namespace

PipelineConfig load_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    PipelineConfig cfg;
    std::string line;
    std::string section;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#' || text.front() == ';') {
            continue;
        }
        if (text.front() == '[') {
            if (text.size() < 3 || text.back() != ']') {
                throw config_error("malformed section header at line " +
                                   std::to_string(line_number));
            }
            section = trim(text.substr(1, text.size() - 2));
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw config_error("expected key=value at line " +
                               std::to_string(line_number));
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (section.empty() || key.empty()) {
            throw config_error("key outside a section at line " +
                               std::to_string(line_number));
        }
        try {
            set_value(cfg, section, key, value);
        } catch (const config_error& e) {
            throw config_error("config line " + std::to_string(line_number) +
                               ": " + e.what());
        }
    }
    return cfg;
}

void apply_override(PipelineConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw config_error("override must look like section.key=value: " +
                           assignment);
    }
    const std::string target = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    const auto dot = target.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= target.size()) {
        throw config_error("override must look like section.key=value: " +
                           assignment);
    }
    set_value(cfg, target.substr(0, dot), target.substr(dot + 1), value);
}

void validate_config(const PipelineConfig& cfg, Stage stage) {
    auto fail = [](const std::string& message) { throw config_error(message); };

    const auto& seeds = cfg.seeds;
    if (!(seeds.lambda_p >= 0.0 && seeds.lambda_p <= 1.0)) {
        fail("seeds.lambda_p must be in [0,1]");
    }
    if (!(seeds.lambda_n >= 0.0 && seeds.lambda_n <= 1.0)) {
        fail("seeds.lambda_n must be in [0,1]");
    }
    if (seeds.min_freq < 0) {
        fail("seeds.min_freq must be nonnegative");
    }
    if (seeds.min_len < 0) {
        fail("seeds.min_len must be nonnegative");
    }
    if (seeds.seed_pos_tags.empty()) {
        fail("seeds.pos_tags must not be empty");
    }

    const auto& prop = cfg.propagation;
    if (!(prop.alpha > 0.0 && prop.alpha < 1.0)) {
        fail("propagation.alpha must be in (0,1)");
    }
    if (!(prop.beta_pos >= 0.0 && prop.beta_pos <= 1.0)) {
        fail("propagation.beta_pos must be in [0,1]");
    }
    if (!(prop.beta_neg >= 0.0 && prop.beta_neg <= 1.0)) {
        fail("propagation.beta_neg must be in [0,1]");
    }
    if (!(prop.tol > 0.0) || !std::isfinite(prop.tol)) {
        fail("propagation.tol must be positive and finite");
    }
    if (prop.max_iter < 1) {
        fail("propagation.max_iter must be at least 1");
    }
    if (prop.top_k < 1) {
        fail("propagation.top_k must be at least 1");
    }
    if (prop.beta_pos > 0.0 && prop.pos_topic_tags.empty()) {
        fail("propagation.pos_topic_tags must not be empty when beta_pos > 0");
    }
    if (prop.beta_neg > 0.0 && prop.neg_topic_tags.empty()) {
        fail("propagation.neg_topic_tags must not be empty when beta_neg > 0");
    }
    if (prop.origin != "candidates" && prop.origin != "seeds") {
        fail("propagation.origin must be 'candidates' or 'seeds'");
    }

    const auto& patterns = cfg.patterns;
    if (patterns.gamma_d < 0) {
        fail("patterns.gamma_d must be nonnegative");
    }
    if (patterns.tau_syn < 0 || patterns.tau_seq < 0) {
        fail("patterns.tau_syn and patterns.tau_seq must be nonnegative");
    }
    if (patterns.max_gap < 0) {
        fail("patterns.max_gap must be nonnegative");
    }
    if (patterns.min_matches < 1) {
        fail("patterns.min_matches must be at least 1");
    }
    if (patterns.noun_tags.empty()) {
        fail("patterns.noun_tags must not be empty");
    }
    if (patterns.candidate_tags.empty()) {
        fail("patterns.candidate_tags must not be empty");
    }

    for (int n : cfg.eval.p_at) {
        if (n < 1) {
            fail("eval.p_at entries must be at least 1");
        }
    }

    if (cfg.paths.output_dir.empty()) {
        fail("paths.output_dir must not be empty");
    }

    switch (stage) {
        case Stage::seeds:
            require_input(cfg.paths.comments, "paths.comments");
            break;
        case Stage::expand:
            require_input(cfg.paths.thesaurus, "paths.thesaurus");
            break;
        case Stage::extract:
            require_input(cfg.paths.parsed_corpus, "paths.parsed_corpus");
            break;
        case Stage::eval:
            if (cfg.paths.gold_lexicon.empty() &&
                cfg.paths.labeled_ranking.empty() &&
                cfg.paths.classification_dataset.empty()) {
                fail("nothing to evaluate: set paths.gold_lexicon, "
                     "paths.labeled_ranking, or paths.classification_dataset");
            }
            if (!cfg.paths.gold_lexicon.empty()) {
                require_input(cfg.paths.gold_lexicon, "paths.gold_lexicon");
            }
            if (!cfg.paths.labeled_ranking.empty()) {
                require_input(cfg.paths.labeled_ranking, "paths.labeled_ranking");
            }
            if (!cfg.paths.classification_dataset.empty()) {
                require_input(cfg.paths.classification_dataset,
                              "paths.classification_dataset");
            }
            break;
    }
}

void run_seeds(const PipelineConfig& cfg, std::ostream& log) {
    validate_config(cfg, Stage::seeds);

    auto in = open_input(cfg.paths.comments, "comments file");
    auto parsed = parse_comments(in);
    log_diagnostics(log, "seeds", "comments file", parsed.diagnostics);
    if (parsed.value.empty() && !parsed.diagnostics.empty()) {
        throw input_error("comments file contains no parsable records");
    }

    const auto counts =
        count_polarity_frequencies(parsed.value, cfg.seeds.seed_pos_tags);
    const auto candidates = score_candidates(counts);
    const auto [positive, negative] = select_seeds(candidates, cfg.seeds);

    log << "seeds: parsed " << parsed.value.size() << " comments, scored "
        << candidates.size() << " candidate words\n";
    log << "seeds: selected " << positive.size() << " positive and "
        << negative.size() << " negative seeds\n";

    const fs::path dir = prepare_output_dir(cfg);
    write_artifact(dir, artifact::seeds_positive, [&](std::ostream& out) {
        write_lexicon(seeds_to_lexicon(positive, Polarity::positive), out);
    });
    write_artifact(dir, artifact::seeds_negative, [&](std::ostream& out) {
        write_lexicon(seeds_to_lexicon(negative, Polarity::negative), out);
    });
    write_artifact(dir, artifact::seed_candidates, [&](std::ostream& out) {
        write_candidates(candidates, out);
    });

    Report report;
    report.add("comments_parsed", static_cast<long>(parsed.value.size()));
    report.add("comment_lines_skipped",
               static_cast<long>(parsed.diagnostics.size()));
    report.add("candidate_words", static_cast<long>(candidates.size()));
    report.add("positive_seeds", static_cast<long>(positive.size()));
    report.add("negative_seeds", static_cast<long>(negative.size()));
    write_artifact(dir, artifact::seeds_report,
                   [&](std::ostream& out) { report.write(out); });
}

namespace {

struct MixOutcome {
    RankVector rank;
    int runs = 0;
    int seeds_matched = 0;
    int seeds_skipped = 0;
};

// One polarity of Eq. 5: beta weighs the POS-topic run, 1-beta the
// seed-topic run. Zero-weight runs are skipped entirely.
MixOutcome run_polarity(const char* label, const SynonymyGraph& graph,
                        const TransitionMatrix& transition,
                        const PropagationConfig& run_cfg, const Lexicon& seeds,
                        const std::set<std::string>& topic_tags, double beta,
                        std::ostream& log) {
    std::optional<RankVector> seed_run;
    std::optional<RankVector> tag_run;
    MixOutcome outcome;

    if (beta < 1.0) {
        std::vector<std::string> seed_words;
        seed_words.reserve(seeds.entries.size());
        for (const LexiconEntry& entry : seeds.entries) {
            seed_words.push_back(entry.word);
        }
        SeedTeleportResult teleport;
        try {
            teleport = make_teleport_seeds(graph, seed_words);
        } catch (const std::domain_error& e) {
            throw stage_error(std::string(label) + " topic undefined: " + e.what());
        }
        outcome.seeds_matched = teleport.matched;
        outcome.seeds_skipped = teleport.skipped;
        if (teleport.skipped > 0) {
            log << "expand: " << teleport.skipped << " " << label
                << " seeds are not graph nodes\n";
        }
        seed_run = pagerank(transition, teleport.dist, run_cfg);
    }
    if (beta > 0.0) {
        TeleportDistribution teleport;
        try {
            teleport = make_teleport_pos(graph, topic_tags);
        } catch (const std::domain_error& e) {
            throw stage_error(std::string(label) + " topic undefined: " + e.what());
        }
        tag_run = pagerank(transition, teleport, run_cfg);
    }

    if (seed_run && tag_run) {
        outcome.rank = combine(*tag_run, *seed_run, beta);
        outcome.runs = 2;
    } else if (tag_run) {
        outcome.rank = std::move(*tag_run);
        outcome.runs = 1;
    } else {
        outcome.rank = std::move(*seed_run);
        outcome.runs = 1;
    }
    if (!outcome.rank.converged) {
        log << "expand: warning: " << label
            << " ranking hit max_iter before reaching tol\n";
    }
    return outcome;
}

}  // namespace

void run_expand(const PipelineConfig& cfg, std::ostream& log) {
    validate_config(cfg, Stage::expand);
    const fs::path dir = cfg.paths.output_dir;

    const Lexicon pos_seeds = read_lexicon_artifact(
        dir, artifact::seeds_positive, "seeds", "expand", log);
    const Lexicon neg_seeds = read_lexicon_artifact(
        dir, artifact::seeds_negative, "seeds", "expand", log);

    const bool origin_candidates = cfg.propagation.origin == "candidates";
    std::vector<SeedCandidate> candidates;
    const fs::path candidates_path = dir / artifact::seed_candidates;
    if (fs::exists(candidates_path)) {
        std::ifstream in(candidates_path, std::ios::binary);
        if (!in) {
            throw input_error("cannot read " + candidates_path.string());
        }
        auto parsed = read_candidates(in);
        log_diagnostics(log, "expand", artifact::seed_candidates,
                        parsed.diagnostics);
        candidates = std::move(parsed.value);
    } else if (origin_candidates) {
        throw config_error(
            std::string(artifact::seed_candidates) +
            " not found in the output directory; run the seeds stage first");
    }

    std::set<std::string> origin;
    if (origin_candidates) {
        for (const SeedCandidate& candidate : candidates) {
            if (utf8_length(candidate.word) >=
                    static_cast<std::size_t>(cfg.seeds.min_len) &&
                candidate.frequency() >= cfg.seeds.min_freq) {
                origin.insert(candidate.word);
            }
        }
    } else {
        for (const LexiconEntry& entry : pos_seeds.entries) {
            origin.insert(entry.word);
        }
        for (const LexiconEntry& entry : neg_seeds.entries) {
            origin.insert(entry.word);
        }
    }
    if (origin.empty()) {
        throw stage_error("bootstrap origin is empty: nothing to expand");
    }

    auto thesaurus_in = open_input(cfg.paths.thesaurus, "thesaurus file");
    const Thesaurus thesaurus = parse_thesaurus(thesaurus_in);

    const std::set<std::string> vocabulary = bootstrap_expand(origin, thesaurus);
    std::map<std::string, std::string> word_pos;
    for (const SeedCandidate& candidate : candidates) {
        word_pos.emplace(candidate.word, candidate.pos);
    }
    const SynonymyGraph graph = build_graph(vocabulary, thesaurus, word_pos);
    log << "expand: " << origin.size() << " origin words expanded to "
        << graph.node_count() << " nodes, " << graph.edge_count() << " edges\n";

    const TransitionMatrix transition = row_stochastic_transition(graph);
    PropagationConfig run_cfg;
    run_cfg.alpha = cfg.propagation.alpha;
    run_cfg.tol = cfg.propagation.tol;
    run_cfg.max_iter = cfg.propagation.max_iter;
    run_cfg.top_k = cfg.propagation.top_k;

    const MixOutcome positive =
        run_polarity("positive", graph, transition, run_cfg, pos_seeds,
                     cfg.propagation.pos_topic_tags, cfg.propagation.beta_pos,
                     log);
    const MixOutcome negative =
        run_polarity("negative", graph, transition, run_cfg, neg_seeds,
                     cfg.propagation.neg_topic_tags, cfg.propagation.beta_neg,
                     log);

    const Lexicon general =
        top_k_general_words(graph, positive.rank, negative.rank,
                            cfg.propagation.top_k, cfg.propagation.exclusions);
    log << "expand: selected " << general.entries.size() << " general words\n";

    const fs::path out_dir = prepare_output_dir(cfg);
    write_artifact(out_dir, artifact::graph_dump, [&](std::ostream& out) {
        write_graph_dump(graph, out);
    });
    write_artifact(out_dir, artifact::rank_positive, [&](std::ostream& out) {
        write_rank_dump(graph, positive.rank, out);
    });
    write_artifact(out_dir, artifact::rank_negative, [&](std::ostream& out) {
        write_rank_dump(graph, negative.rank, out);
    });
    write_artifact(out_dir, artifact::general_lexicon, [&](std::ostream& out) {
        write_lexicon(general, out);
    });

    Report report;
    report.add("origin_words", static_cast<long>(origin.size()));
    report.add("graph_nodes", static_cast<long>(graph.node_count()));
    report.add("graph_edges", static_cast<long>(graph.edge_count()));
    report.add("positive_runs", static_cast<long>(positive.runs));
    report.add("positive_seeds_matched",
               static_cast<long>(positive.seeds_matched));
    report.add("positive_seeds_skipped",
               static_cast<long>(positive.seeds_skipped));
    report.add("positive_iterations", static_cast<long>(positive.rank.iterations));
    report.add("positive_residual", positive.rank.residual);
    report.add("positive_converged",
               static_cast<long>(positive.rank.converged ? 1 : 0));
    report.add("negative_runs", static_cast<long>(negative.runs));
    report.add("negative_seeds_matched",
               static_cast<long>(negative.seeds_matched));
    report.add("negative_seeds_skipped",
               static_cast<long>(negative.seeds_skipped));
    report.add("negative_iterations", static_cast<long>(negative.rank.iterations));
    report.add("negative_residual", negative.rank.residual);
    report.add("negative_converged",
               static_cast<long>(negative.rank.converged ? 1 : 0));
    report.add("general_words", static_cast<long>(general.entries.size()));
    write_artifact(out_dir, artifact::expand_report,
                   [&](std::ostream& out) { report.write(out); });
}

void run_extract(const PipelineConfig& cfg, std::ostream& log) {
    validate_config(cfg, Stage::extract);
    const fs::path dir = cfg.paths.output_dir;

    const Lexicon general = read_lexicon_artifact(
        dir, artifact::general_lexicon, "expand", "extract", log);
    if (general.entries.empty()) {
        throw stage_error("general lexicon is empty: nothing to match against");
    }

    auto in = open_input(cfg.paths.parsed_corpus, "parsed corpus");
    auto parsed = parse_parsed_corpus(in);
    log_diagnostics(log, "extract", "parsed corpus", parsed.diagnostics);
    if (parsed.value.empty() && !parsed.diagnostics.empty()) {
        throw input_error("parsed corpus contains no usable sentences");
    }

    const TargetSet targets = extract_targets(parsed.value, cfg.patterns.gamma_d,
                                              cfg.patterns.noun_tags);
    PatternLibrary library;
    if (targets.words.empty()) {
        log << "extract: warning: no noun exceeds the target frequency "
               "threshold; pattern library is empty\n";
    } else {
        library = build_pattern_library(parsed.value, general, targets,
                                        cfg.patterns.tau_syn,
                                        cfg.patterns.tau_seq,
                                        cfg.patterns.max_gap);
    }
    const DsswExtraction extraction = extract_dssw(
        parsed.value, library, targets, general, cfg.patterns.candidate_tags,
        cfg.patterns.max_gap, cfg.patterns.min_matches);

    log << "extract: " << targets.words.size() << " target nouns, "
        << library.syntactic.size() << " syntactic and "
        << library.sequential.size() << " sequential patterns\n";
    log << "extract: " << extraction.dssw.entries.size()
        << " sentiment words extracted (" << extraction.already_general.size()
        << " already general)\n";

    long dssw_positive = 0;
    long dssw_negative = 0;
    for (const LexiconEntry& entry : extraction.dssw.entries) {
        (entry.polarity == Polarity::positive ? dssw_positive : dssw_negative) +=
            1;
    }

    const fs::path out_dir = prepare_output_dir(cfg);
    write_artifact(out_dir, artifact::pattern_library, [&](std::ostream& out) {
        write_pattern_library(library, out);
    });
    write_artifact(out_dir, artifact::dssw_lexicon, [&](std::ostream& out) {
        write_lexicon(extraction.dssw, out);
    });

    Report report;
    report.add("sentences_parsed", static_cast<long>(parsed.value.size()));
    report.add("sentences_rejected", static_cast<long>(parsed.diagnostics.size()));
    report.add("target_words", static_cast<long>(targets.words.size()));
    report.add("syntactic_patterns", static_cast<long>(library.syntactic.size()));
    report.add("sequential_patterns",
               static_cast<long>(library.sequential.size()));
    report.add("dssw_words", static_cast<long>(extraction.dssw.entries.size()));
    report.add("dssw_positive", dssw_positive);
    report.add("dssw_negative", dssw_negative);
    report.add("dssw_already_general",
               static_cast<long>(extraction.already_general.size()));
    write_artifact(out_dir, artifact::extract_report,
                   [&](std::ostream& out) { report.write(out); });
}

void run_eval(const PipelineConfig& cfg, std::ostream& log) {
    validate_config(cfg, Stage::eval);
    const fs::path dir = cfg.paths.output_dir;

    const Lexicon dssw =
        read_lexicon_artifact(dir, artifact::dssw_lexicon, "extract", "eval", log);
    std::optional<Lexicon> general;
    if (fs::exists(dir / artifact::general_lexicon)) {
        general = read_lexicon_artifact(dir, artifact::general_lexicon, "expand",
                                        "eval", log);
    }

    Report report;

    if (!cfg.paths.gold_lexicon.empty()) {
        auto gold_in = open_input(cfg.paths.gold_lexicon, "gold lexicon");
        auto gold_parsed = read_lexicon(gold_in);
        log_diagnostics(log, "eval", "gold lexicon", gold_parsed.diagnostics);
        GoldLexicon gold;
        gold.positive = gold_parsed.value.words(Polarity::positive);
        gold.negative = gold_parsed.value.words(Polarity::negative);
        if (gold.all().empty()) {
            throw input_error("gold lexicon is empty");
        }
        std::vector<std::string> both;
        std::set_intersection(gold.positive.begin(), gold.positive.end(),
                              gold.negative.begin(), gold.negative.end(),
                              std::back_inserter(both));
        if (!both.empty()) {
            throw input_error("gold lexicon assigns both polarities to " +
                              std::to_string(both.size()) + " words");
        }

        const std::set<std::string> extracted = dssw.words();
        const Prf overall = prf1(extracted, gold.all());
        report.add("dssw_precision", overall.precision);
        report.add("dssw_recall", overall.recall);
        report.add("dssw_f1", overall.f1);
        if (!gold.positive.empty()) {
            const Prf pos = prf1(dssw.words(Polarity::positive), gold.positive);
            report.add("dssw_positive_precision", pos.precision);
            report.add("dssw_positive_recall", pos.recall);
            report.add("dssw_positive_f1", pos.f1);
        }
        if (!gold.negative.empty()) {
            const Prf neg = prf1(dssw.words(Polarity::negative), gold.negative);
            report.add("dssw_negative_precision", neg.precision);
            report.add("dssw_negative_recall", neg.recall);
            report.add("dssw_negative_f1", neg.f1);
        }
        if (general) {
            std::set<std::string> novel = extracted;
            for (const std::string& word : general->words()) {
                novel.erase(word);
            }
            const Prf fresh = prf1(novel, gold.all());
            report.add("novel_precision", fresh.precision);
            report.add("novel_recall", fresh.recall);
            report.add("novel_f1", fresh.f1);
        }
        log << "eval: dssw F1 " << format_double(overall.f1) << " against "
            << gold.all().size() << " gold words\n";
    }

    if (!cfg.paths.labeled_ranking.empty()) {
        auto labels_in = open_input(cfg.paths.labeled_ranking, "label file");
        auto labels = read_word_labels(labels_in);
        log_diagnostics(log, "eval", "label file", labels.diagnostics);

        const struct {
            const char* file;
            const char* prefix;
            HumanLabel relevant;
        } dumps[] = {
            {artifact::rank_positive, "positive", HumanLabel::positive},
            {artifact::rank_negative, "negative", HumanLabel::negative},
        };
        for (const auto& dump : dumps) {
            const fs::path path = dir / dump.file;
            if (!fs::exists(path)) {
                throw config_error(
                    std::string(dump.file) +
                    " not found in the output directory; run the expand stage "
                    "first");
            }
            const LabeledRanking ranking =
                apply_labels(read_rank_words(path), labels.value);
            for (int n : cfg.eval.p_at) {
                if (static_cast<std::size_t>(n) > ranking.items.size()) {
                    log << "eval: skipping P@" << n << " for the " << dump.prefix
                        << " ranking (only " << ranking.items.size()
                        << " entries)\n";
                    continue;
                }
                report.add(std::string(dump.prefix) + "_p_at_" +
                               std::to_string(n),
                           precision_at_n(ranking, n, {dump.relevant}));
            }
        }
    }

    if (!cfg.paths.classification_dataset.empty()) {
        auto data_in =
            open_input(cfg.paths.classification_dataset, "classification dataset");
        auto dataset = read_classification_dataset(data_in);
        log_diagnostics(log, "eval", "classification dataset",
                        dataset.diagnostics);
        if (dataset.value.empty()) {
            throw input_error("classification dataset contains no sentences");
        }
        report.add("classification_accuracy_dssw",
                   evaluate_classification(dataset.value, dssw));
        if (general) {
            report.add("classification_accuracy_general",
                       evaluate_classification(dataset.value, *general));
            Lexicon combined = *general;
            combined.entries.insert(combined.entries.end(), dssw.entries.begin(),
                                    dssw.entries.end());
            report.add("classification_accuracy_combined",
                       evaluate_classification(dataset.value, combined));
        }
        log << "eval: classified " << dataset.value.size() << " sentences\n";
    }

    const fs::path out_dir = prepare_output_dir(cfg);
    write_artifact(out_dir, artifact::eval_report,
                   [&](std::ostream& out) { report.write(out); });
}

void write_candidates(const std::vector<SeedCandidate>& candidates,
                      std::ostream& out) {
    out << "# lexforge-candidates v1\n";
    for (const SeedCandidate& candidate : candidates) {
        out << candidate.word << '\t' << candidate.pos << '\t' << candidate.cp
            << '\t' << candidate.cn << '\t' << format_double(candidate.sps)
            << '\t' << format_double(candidate.sns) << '\n';
    }
}

ParseResult<std::vector<SeedCandidate>> read_candidates(std::istream& in) {
    ParseResult<std::vector<SeedCandidate>> result;
    std::string line;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::vector<std::string_view> fields = split_tabs(line);
        SeedCandidate candidate;
        if (fields.size() != 6 || fields[0].empty() || fields[1].empty() ||
            !parse_number(fields[2], candidate.cp) ||
            !parse_number(fields[3], candidate.cn) ||
            !parse_number(fields[4], candidate.sps) ||
            !parse_number(fields[5], candidate.sns) || candidate.cp < 0 ||
            candidate.cn < 0 || candidate.cp + candidate.cn <= 0 ||
            !(candidate.sps >= 0.0 && candidate.sps <= 1.0) ||
            !(candidate.sns >= 0.0 && candidate.sns <= 1.0)) {
            result.diagnostics.push_back({line_number, "malformed candidate row"});
            continue;
        }
        candidate.word = std::string(fields[0]);
        candidate.pos = std::string(fields[1]);
        result.value.push_back(std::move(candidate));
    }
    return result;
}

}  // namespace lexforge
