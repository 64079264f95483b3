#include "lexforge/pattern_engine.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "line_parsing.hpp"

namespace lexforge {

namespace {

using detail::next_line;
using detail::parse_number;
using detail::split_spaces;
using detail::split_tabs;

void check_pair(const ParsedSentence& sentence, int s_index, int t_index) {
    const int n = static_cast<int>(sentence.size());
    if (s_index < 1 || s_index > n || t_index < 1 || t_index > n) {
        throw std::invalid_argument("token index out of range");
    }
    if (s_index == t_index) {
        throw std::invalid_argument("slot indices must differ");
    }
}

// Chain of indices from a token up to the root, starting with the token.
std::vector<int> root_chain(const ParsedSentence& sentence, int index) {
    std::vector<int> chain;
    int current = index;
    while (current != 0) {
        chain.push_back(current);
        current = sentence.tokens[static_cast<std::size_t>(current - 1)].head;
    }
    return chain;
}

const std::string& deprel_of(const ParsedSentence& sentence, int index) {
    return sentence.tokens[static_cast<std::size_t>(index - 1)].deprel;
}

// Majority polarity of a word in the general lexicon when it carries
// both; higher score wins, ties go positive.
std::map<std::string, Polarity> polarity_by_word(const Lexicon& general) {
    std::map<std::string, std::pair<Polarity, double>> best;
    for (const LexiconEntry& entry : general.entries) {
        auto it = best.find(entry.word);
        if (it == best.end()) {
            best.emplace(entry.word, std::make_pair(entry.polarity, entry.score));
            continue;
        }
        auto& [polarity, score] = it->second;
        if (entry.score > score ||
            (entry.score == score && entry.polarity == Polarity::positive)) {
            polarity = entry.polarity;
            score = entry.score;
        }
    }
    std::map<std::string, Polarity> result;
    for (const auto& [word, chosen] : best) {
        result.emplace(word, chosen.first);
    }
    return result;
}

template <class Pattern>
void tally(std::map<Pattern, PatternStats>& counts, const Pattern& pattern,
           Polarity polarity) {
    PatternStats& stats = counts[pattern];
    ++stats.support;
    if (polarity == Polarity::positive) {
        ++stats.pos_support;
    } else {
        ++stats.neg_support;
    }
}

template <class Pattern>
std::vector<std::pair<Pattern, PatternStats>> top_tau(
    const std::map<Pattern, PatternStats>& counts, long tau) {
    std::vector<std::pair<Pattern, PatternStats>> ranked(counts.begin(),
                                                         counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second.support != b.second.support) {
                             return a.second.support > b.second.support;
                         }
                         return a.first.canonical() < b.first.canonical();
                     });
    if (tau < 0) {
        tau = 0;
    }
    if (ranked.size() > static_cast<std::size_t>(tau)) {
        ranked.resize(static_cast<std::size_t>(tau));
    }
    return ranked;
}

}  // namespace

std::string SyntacticPattern::canonical() const {
    std::string text = "(S)";
    for (const SyntacticStep& step : steps) {
        text += ' ';
        text += step.deprel;
        text += step.up ? '+' : '-';
    }
    text += " (T)";
    return text;
}

std::optional<SyntacticPattern> SyntacticPattern::parse(std::string_view text) {
    const std::vector<std::string_view> parts = split_spaces(text);
    if (parts.size() < 3 || parts.front() != "(S)" || parts.back() != "(T)") {
        return std::nullopt;
    }
    SyntacticPattern pattern;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
        const std::string_view part = parts[i];
        const char direction = part.back();
        if (part.size() < 2 || (direction != '+' && direction != '-')) {
            return std::nullopt;
        }
        pattern.steps.push_back(
            {std::string(part.substr(0, part.size() - 1)), direction == '+'});
    }
    return pattern;
}

std::string SequentialPattern::canonical() const {
    const bool forward = orientation == Orientation::s_before_t;
    std::string text = forward ? "(S)" : "(T)";
    for (const std::string& tag : pos_sequence) {
        text += ' ';
        text += tag;
    }
    text += forward ? " (T)" : " (S)";
    return text;
}

std::optional<SequentialPattern> SequentialPattern::parse(std::string_view text) {
    const std::vector<std::string_view> parts = split_spaces(text);
    if (parts.size() < 2) {
        return std::nullopt;
    }
    SequentialPattern pattern;
    if (parts.front() == "(S)" && parts.back() == "(T)") {
        pattern.orientation = Orientation::s_before_t;
    } else if (parts.front() == "(T)" && parts.back() == "(S)") {
        pattern.orientation = Orientation::t_before_s;
    } else {
        return std::nullopt;
    }
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
        if (parts[i] == "(S)" || parts[i] == "(T)") {
            return std::nullopt;
        }
        pattern.pos_sequence.push_back(std::string(parts[i]));
    }
    return pattern;
}

TargetSet extract_targets(std::span<const ParsedSentence> corpus, long gamma_d,
                          const std::set<std::string>& noun_tags) {
    std::map<std::string, long> frequency;
    for (const ParsedSentence& sentence : corpus) {
        for (const ParsedToken& token : sentence.tokens) {
            if (noun_tags.count(token.pos) > 0) {
                ++frequency[token.surface];
            }
        }
    }
    TargetSet targets;
    for (const auto& [word, count] : frequency) {
        if (count > gamma_d) {
            targets.words.emplace(word, count);
        }
    }
    return targets;
}

SyntacticPattern syntactic_pattern(const ParsedSentence& sentence, int s_index,
                                   int t_index) {
    check_pair(sentence, s_index, t_index);
    const std::vector<int> s_chain = root_chain(sentence, s_index);
    const std::vector<int> t_chain = root_chain(sentence, t_index);

    // Trim the shared tail; the last common node is the LCA.
    std::size_t s_len = s_chain.size();
    std::size_t t_len = t_chain.size();
    while (s_len > 0 && t_len > 0 && s_chain[s_len - 1] == t_chain[t_len - 1]) {
        --s_len;
        --t_len;
    }

    SyntacticPattern pattern;
    for (std::size_t i = 0; i < s_len; ++i) {
        pattern.steps.push_back({deprel_of(sentence, s_chain[i]), true});
    }
    for (std::size_t i = t_len; i > 0; --i) {
        pattern.steps.push_back({deprel_of(sentence, t_chain[i - 1]), false});
    }
    return pattern;
}

std::optional<SequentialPattern> sequential_pattern(const ParsedSentence& sentence,
                                                    int s_index, int t_index,
                                                    int max_gap) {
    check_pair(sentence, s_index, t_index);
    const int low = std::min(s_index, t_index);
    const int high = std::max(s_index, t_index);
    if (high - low - 1 > max_gap) {
        return std::nullopt;
    }
    SequentialPattern pattern;
    pattern.orientation = s_index < t_index ? Orientation::s_before_t
                                            : Orientation::t_before_s;
    for (int i = low + 1; i < high; ++i) {
        pattern.pos_sequence.push_back(
            sentence.tokens[static_cast<std::size_t>(i - 1)].pos);
    }
    return pattern;
}

PatternLibrary build_pattern_library(std::span<const ParsedSentence> corpus,
                                     const Lexicon& general,
                                     const TargetSet& targets,
                                     long tau_syn, long tau_seq, int max_gap) {
    const std::map<std::string, Polarity> polarity = polarity_by_word(general);
    std::map<SyntacticPattern, PatternStats> syntactic;
    std::map<SequentialPattern, PatternStats> sequential;

    for (const ParsedSentence& sentence : corpus) {
        std::vector<std::pair<int, Polarity>> general_slots;
        std::vector<int> target_slots;
        for (const ParsedToken& token : sentence.tokens) {
            auto it = polarity.find(token.surface);
            if (it != polarity.end()) {
                general_slots.emplace_back(token.index, it->second);
            }
            if (targets.contains(token.surface)) {
                target_slots.push_back(token.index);
            }
        }
        for (const auto& [s_index, word_polarity] : general_slots) {
            for (int t_index : target_slots) {
                if (s_index == t_index) {
                    continue;
                }
                tally(syntactic, syntactic_pattern(sentence, s_index, t_index),
                      word_polarity);
                if (auto seq =
                        sequential_pattern(sentence, s_index, t_index, max_gap)) {
                    tally(sequential, *seq, word_polarity);
                }
            }
        }
    }

    PatternLibrary library;
    library.syntactic = top_tau(syntactic, tau_syn);
    library.sequential = top_tau(sequential, tau_seq);
    return library;
}

DsswExtraction extract_dssw(std::span<const ParsedSentence> corpus,
                            const PatternLibrary& library,
                            const TargetSet& targets,
                            const Lexicon& general,
                            const std::set<std::string>& candidate_tags,
                            int max_gap,
                            long min_matches) {
    std::map<SyntacticPattern, PatternStats> syn_index(library.syntactic.begin(),
                                                       library.syntactic.end());
    std::map<SequentialPattern, PatternStats> seq_index(library.sequential.begin(),
                                                        library.sequential.end());

    struct Votes {
        long matches = 0;
        long pos = 0;
        long neg = 0;
    };
    std::map<std::string, Votes> tallies;

    for (const ParsedSentence& sentence : corpus) {
        std::vector<int> candidate_slots;
        std::vector<int> target_slots;
        for (const ParsedToken& token : sentence.tokens) {
            if (candidate_tags.count(token.pos) > 0) {
                candidate_slots.push_back(token.index);
            }
            if (targets.contains(token.surface)) {
                target_slots.push_back(token.index);
            }
        }
        for (int s_index : candidate_slots) {
            const std::string& word =
                sentence.tokens[static_cast<std::size_t>(s_index - 1)].surface;
            for (int t_index : target_slots) {
                if (s_index == t_index) {
                    continue;
                }
                auto syn_it =
                    syn_index.find(syntactic_pattern(sentence, s_index, t_index));
                if (syn_it != syn_index.end()) {
                    Votes& votes = tallies[word];
                    ++votes.matches;
                    votes.pos += syn_it->second.pos_support;
                    votes.neg += syn_it->second.neg_support;
                }
                if (auto seq =
                        sequential_pattern(sentence, s_index, t_index, max_gap)) {
                    auto seq_it = seq_index.find(*seq);
                    if (seq_it != seq_index.end()) {
                        Votes& votes = tallies[word];
                        ++votes.matches;
                        votes.pos += seq_it->second.pos_support;
                        votes.neg += seq_it->second.neg_support;
                    }
                }
            }
        }
    }

    DsswExtraction result;
    for (const auto& [word, votes] : tallies) {
        if (votes.matches < min_matches) {
            continue;
        }
        const Polarity polarity = votes.neg > votes.pos ? Polarity::negative
                                                        : Polarity::positive;
        result.dssw.entries.push_back(
            {word, polarity, static_cast<double>(votes.matches)});
        if (general.contains(word)) {
            result.already_general.insert(word);
        }
    }
    result.dssw = normalize(std::move(result.dssw));
    return result;
}

void write_pattern_library(const PatternLibrary& library, std::ostream& out) {
    out << "# lexforge-patterns v1\n";
    for (const auto& [pattern, stats] : library.syntactic) {
        out << "syn\t" << pattern.canonical() << '\t' << stats.support << '\t'
            << stats.pos_support << '\t' << stats.neg_support << '\n';
    }
    for (const auto& [pattern, stats] : library.sequential) {
        out << "seq\t" << pattern.canonical() << '\t' << stats.support << '\t'
            << stats.pos_support << '\t' << stats.neg_support << '\n';
    }
}

ParseResult<PatternLibrary> read_pattern_library(std::istream& in) {
    ParseResult<PatternLibrary> result;
    std::map<SyntacticPattern, PatternStats> syntactic;
    std::map<SequentialPattern, PatternStats> sequential;

    std::string line;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::vector<std::string_view> fields = split_tabs(line);
        PatternStats stats;
        if (fields.size() != 5 || !parse_number(fields[2], stats.support) ||
            !parse_number(fields[3], stats.pos_support) ||
            !parse_number(fields[4], stats.neg_support) || stats.support < 0 ||
            stats.pos_support < 0 || stats.neg_support < 0) {
            result.diagnostics.push_back({line_number, "malformed pattern row"});
            continue;
        }
        if (fields[0] == "syn") {
            auto pattern = SyntacticPattern::parse(fields[1]);
            if (!pattern) {
                result.diagnostics.push_back(
                    {line_number, "unparsable syntactic pattern"});
                continue;
            }
            syntactic[*pattern] = stats;
        } else if (fields[0] == "seq") {
            auto pattern = SequentialPattern::parse(fields[1]);
            if (!pattern) {
                result.diagnostics.push_back(
                    {line_number, "unparsable sequential pattern"});
                continue;
            }
            sequential[*pattern] = stats;
        } else {
            result.diagnostics.push_back(
                {line_number,
                 "unknown pattern kind '" + std::string(fields[0]) + "'"});
        }
    }

    result.value.syntactic =
        top_tau(syntactic, static_cast<long>(syntactic.size()));
    result.value.sequential =
        top_tau(sequential, static_cast<long>(sequential.size()));
    return result;
}

}  // namespace lexforge
