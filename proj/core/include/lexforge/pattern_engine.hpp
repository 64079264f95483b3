#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexforge/corpus_io.hpp"

namespace lexforge {

// Frequent domain nouns that sentiment words attach to.
struct TargetSet {
    std::map<std::string, long> words;  // noun -> corpus frequency (> gamma_d)

    bool contains(const std::string& word) const { return words.count(word) > 0; }
};

// One step along the dependency path: the deprel label, walked either
// toward the parent (up, rendered "LABEL+") or into a child ("LABEL-").
struct SyntacticStep {
    std::string deprel;
    bool up = true;

    bool operator==(const SyntacticStep&) const = default;
    auto operator<=>(const SyntacticStep&) const = default;
};

// Dependency-path encoding between the sentiment slot (S) and target
// slot (T), e.g. "(S) DE+ ATT+ (T)".
struct SyntacticPattern {
    std::vector<SyntacticStep> steps;

    std::string canonical() const;
    static std::optional<SyntacticPattern> parse(std::string_view text);

    bool operator==(const SyntacticPattern&) const = default;
    auto operator<=>(const SyntacticPattern&) const = default;
};

enum class Orientation { s_before_t, t_before_s };

// Surface POS-tag string strictly between the two slots,
// e.g. "(S) a u n (T)" or, when the target comes first, "(T) v (S)".
struct SequentialPattern {
    Orientation orientation = Orientation::s_before_t;
    std::vector<std::string> pos_sequence;

    std::string canonical() const;
    static std::optional<SequentialPattern> parse(std::string_view text);

    bool operator==(const SequentialPattern&) const = default;
    auto operator<=>(const SequentialPattern&) const = default;
};

struct PatternStats {
    long support = 0;
    long pos_support = 0;  // instantiations by positive general words
    long neg_support = 0;
};

// Top-tau patterns of each kind, sorted by support desc then canonical
// form.
struct PatternLibrary {
    std::vector<std::pair<SyntacticPattern, PatternStats>> syntactic;
    std::vector<std::pair<SequentialPattern, PatternStats>> sequential;

    bool empty() const { return syntactic.empty() && sequential.empty(); }
};

// Nouns whose frequency exceeds gamma_d (strict), counting occurrences
// tagged with a noun tag only.
TargetSet extract_targets(std::span<const ParsedSentence> corpus, long gamma_d,
                          const std::set<std::string>& noun_tags = {"n"});

// Unique tree path from token s_index to token t_index (both 1-based).
// Throws std::invalid_argument on equal or out-of-range indices.
SyntacticPattern syntactic_pattern(const ParsedSentence& sentence, int s_index,
                                   int t_index);

// POS tags of the tokens strictly between the two positions, in surface
// order; nullopt when the gap exceeds max_gap.
std::optional<SequentialPattern> sequential_pattern(const ParsedSentence& sentence,
                                                    int s_index, int t_index,
                                                    int max_gap);

// Mine both pattern kinds from every (general word, target) occurrence
// pair and keep the top tau of each by support.
PatternLibrary build_pattern_library(std::span<const ParsedSentence> corpus,
                                     const Lexicon& general,
                                     const TargetSet& targets,
                                     long tau_syn, long tau_seq, int max_gap);

struct DsswExtraction {
    Lexicon dssw;                           // score = match count
    std::set<std::string> already_general;  // extracted words the general lexicon had
};

// Extract candidates (tag in candidate_tags) whose syntactic or sequential
// pattern with a target occurrence matches the library. Polarity follows
// the majority polarity support of the matched patterns; ties go positive.
DsswExtraction extract_dssw(std::span<const ParsedSentence> corpus,
                            const PatternLibrary& library,
                            const TargetSet& targets,
                            const Lexicon& general,
                            const std::set<std::string>& candidate_tags = {"a", "i"},
                            int max_gap = 10,
                            long min_matches = 1);

// Pattern library file: "# lexforge-patterns v1" header, then
// kind<TAB>canonical<TAB>support<TAB>pos_support<TAB>neg_support.
void write_pattern_library(const PatternLibrary& library, std::ostream& out);
ParseResult<PatternLibrary> read_pattern_library(std::istream& in);

}  // namespace lexforge
