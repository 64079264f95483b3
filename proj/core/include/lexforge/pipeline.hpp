#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexforge/seed_extraction.hpp"

namespace lexforge {

// Bad configuration or unmet stage precondition; reported before any
// computation starts. CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input file that could not be parsed into anything usable. CLI exit
// code 3.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pipeline stage failed on valid input (e.g. no seed overlaps the
// graph). CLI exit code 4.
struct stage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All paper parameters plus file locations, loadable from an INI-style
// key=value file with [section] headers.
struct PipelineConfig {
    struct Paths {
        std::filesystem::path comments;
        std::filesystem::path thesaurus;
        std::filesystem::path parsed_corpus;
        std::filesystem::path gold_lexicon;
        std::filesystem::path classification_dataset;
        std::filesystem::path labeled_ranking;
        std::filesystem::path output_dir = "out";
    } paths;

    SeedSelectionConfig seeds;

    struct Propagation {
        double alpha = 0.85;
        double beta_pos = 0.0;   // POS-topic weight in the positive mix
        double beta_neg = 0.75;  // POS-topic weight in the negative mix
        double tol = 1e-8;
        int max_iter = 200;
        int top_k = 200;
        std::set<std::string> pos_topic_tags = {"a"};
        std::set<std::string> neg_topic_tags = {"i"};
        std::set<std::string> exclusions;
        std::string origin = "candidates";  // bootstrap origin: candidates | seeds
    } propagation;

    struct Patterns {
        long gamma_d = 100;
        long tau_syn = 200;
        long tau_seq = 200;
        int max_gap = 10;
        long min_matches = 1;
        std::set<std::string> noun_tags = {"n"};
        std::set<std::string> candidate_tags = {"a", "i"};
    } patterns;

    struct Eval {
        std::vector<int> p_at = {50, 100, 500, 1000};
    } eval;
};

// Parse a config file. Unknown keys are config errors.
PipelineConfig load_config(const std::filesystem::path& path);

// Apply one "section.key=value" override (the CLI --set flag).
void apply_override(PipelineConfig& cfg, const std::string& assignment);

enum class Stage { seeds, expand, extract, eval };

// Fail-fast validation: referenced input paths must exist and numeric
// parameters must satisfy their invariants before any work starts.
void validate_config(const PipelineConfig& cfg, Stage stage);

// Stage entry points. Each writes its artifacts into paths.output_dir and
// logs progress lines to `log`. All outputs are byte-stable given
// identical inputs and config.
void run_seeds(const PipelineConfig& cfg, std::ostream& log);
void run_expand(const PipelineConfig& cfg, std::ostream& log);
void run_extract(const PipelineConfig& cfg, std::ostream& log);
void run_eval(const PipelineConfig& cfg, std::ostream& log);

// Artifact filenames inside the output directory.
namespace artifact {
inline constexpr const char* seeds_positive = "seeds_positive.lex";
inline constexpr const char* seeds_negative = "seeds_negative.lex";
inline constexpr const char* seed_candidates = "seed_candidates.tsv";
inline constexpr const char* seeds_report = "seeds_report.tsv";
inline constexpr const char* graph_dump = "graph.tsv";
inline constexpr const char* rank_positive = "rank_positive.tsv";
inline constexpr const char* rank_negative = "rank_negative.tsv";
inline constexpr const char* general_lexicon = "general.lex";
inline constexpr const char* expand_report = "expand_report.tsv";
inline constexpr const char* pattern_library = "patterns.lib";
inline constexpr const char* dssw_lexicon = "dssw.lex";
inline constexpr const char* extract_report = "extract_report.tsv";
inline constexpr const char* eval_report = "eval_report.tsv";
}  // namespace artifact

// Scored-candidate table: word pos cp cn sps sns, one row per candidate.
void write_candidates(const std::vector<SeedCandidate>& candidates,
                      std::ostream& out);
ParseResult<std::vector<SeedCandidate>> read_candidates(std::istream& in);

}  // namespace lexforge
