#include "lexforge/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "line_parsing.hpp"

namespace lexforge {

using detail::next_line;
using detail::parse_number;
using detail::parse_token_field;
using detail::split_spaces;
using detail::split_tabs;

const std::set<std::string>* Thesaurus::find(const std::string& word) const {
    auto it = entries.find(word);
    return it == entries.end() ? nullptr : &it->second;
}

const char* polarity_name(Polarity p) {
    return p == Polarity::positive ? "positive" : "negative";
}

bool Lexicon::contains(const std::string& word) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const LexiconEntry& e) { return e.word == word; });
}

std::set<std::string> Lexicon::words() const {
    std::set<std::string> result;
    for (const auto& entry : entries) result.insert(entry.word);
    return result;
}

std::set<std::string> Lexicon::words(Polarity p) const {
    std::set<std::string> result;
    for (const auto& entry : entries)
        if (entry.polarity == p) result.insert(entry.word);
    return result;
}

ParseResult<std::vector<CommentRecord>> parse_comments(std::istream& in) {
    ParseResult<std::vector<CommentRecord>> result;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;

        const auto fields = split_tabs(line);
        if (fields.size() != 4) {
            result.diagnostics.push_back(
                {line_no, "expected 4 tab-separated fields, got " +
                              std::to_string(fields.size())});
            continue;
        }

        CommentRecord record;
        if (!parse_number(fields[0], record.rating)) {
            result.diagnostics.push_back(
                {line_no, "unparseable rating '" + std::string(fields[0]) + "'"});
            continue;
        }
        if (!parse_token_field(fields[1], record.overall) ||
            !parse_token_field(fields[2], record.pros) ||
            !parse_token_field(fields[3], record.cons)) {
            result.diagnostics.push_back(
                {line_no, "token without surface_POS form"});
            continue;
        }
        result.value.push_back(std::move(record));
    }
    return result;
}

Thesaurus parse_thesaurus(std::istream& in) {
    Thesaurus thesaurus;
    std::string line;
    while (next_line(in, line)) {
        const auto words = split_spaces(line);
        if (words.empty()) continue;
        const std::string head(words.front());
        auto& synonyms = thesaurus.entries[head];  // headword always present
        for (std::size_t i = 1; i < words.size(); ++i) {
            if (words[i] != head) synonyms.insert(std::string(words[i]));
        }
    }
    return thesaurus;
}

namespace {

// nullopt on success, otherwise the reason the block is not a tree.
std::optional<std::string> validate_tree(const ParsedSentence& sentence) {
    const int n = static_cast<int>(sentence.tokens.size());
    int root = 0;
    for (int i = 0; i < n; ++i) {
        const ParsedToken& token = sentence.tokens[i];
        if (token.index != i + 1)
            return "token ids not contiguous from 1 (saw " +
                   std::to_string(token.index) + " at position " +
                   std::to_string(i + 1) + ")";
        if (token.head < 0 || token.head > n)
            return "head " + std::to_string(token.head) + " out of range";
        if (token.head == token.index)
            return "token " + std::to_string(token.index) + " heads itself";
        if (token.head == 0) {
            if (root != 0) return "multiple roots";
            root = token.index;
        }
    }
    if (root == 0) return "no root";

    // n-1 parent edges + one root: connected from the root <=> acyclic.
    std::vector<std::vector<int>> children(n + 1);
    for (const auto& token : sentence.tokens)
        if (token.head != 0) children[token.head].push_back(token.index);
    std::vector<bool> seen(n + 1, false);
    std::deque<int> queue{root};
    seen[root] = true;
    int visited = 0;
    while (!queue.empty()) {
        const int node = queue.front();
        queue.pop_front();
        ++visited;
        for (int child : children[node]) {
            if (!seen[child]) {
                seen[child] = true;
                queue.push_back(child);
            }
        }
    }
    if (visited != n) return "cycle (tree not fully reachable from root)";
    return std::nullopt;
}

}  // namespace

ParseResult<std::vector<ParsedSentence>> parse_parsed_corpus(std::istream& in) {
    ParseResult<std::vector<ParsedSentence>> result;

    ParsedSentence current;
    std::size_t block_start_line = 0;
    std::size_t ordinal = 0;
    bool block_broken = false;
    std::string broken_reason;

    auto flush = [&]() {
        if (current.tokens.empty() && !block_broken) return;
        ++ordinal;
        std::optional<std::string> reason;
        if (block_broken)
            reason = broken_reason;
        else
            reason = validate_tree(current);
        if (reason) {
            result.diagnostics.push_back(
                {block_start_line,
                 "sentence " + std::to_string(ordinal) + " rejected: " + *reason});
        } else {
            result.value.push_back(std::move(current));
        }
        current = ParsedSentence{};
        block_broken = false;
    };

    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.front() == '#') continue;
        if (block_broken) continue;  // skip rest of an already-broken block

        if (current.tokens.empty()) block_start_line = line_no;
        const auto columns = split_tabs(line);
        ParsedToken token;
        if (columns.size() < 5 || !parse_number(columns[0], token.index) ||
            !parse_number(columns[3], token.head)) {
            block_broken = true;
            broken_reason = "malformed token line " + std::to_string(line_no);
            continue;
        }
        token.surface = std::string(columns[1]);
        token.pos = std::string(columns[2]);
        token.deprel = std::string(columns[4]);
        if (token.surface.empty() || token.pos.empty() || token.deprel.empty()) {
            block_broken = true;
            broken_reason = "empty column on line " + std::to_string(line_no);
            continue;
        }
        current.tokens.push_back(std::move(token));
    }
    flush();
    return result;
}

Lexicon normalize(Lexicon lexicon) {
    std::sort(lexicon.entries.begin(), lexicon.entries.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) {
                  if (a.polarity != b.polarity)
                      return a.polarity == Polarity::positive;
                  if (a.score != b.score) return a.score > b.score;
                  return a.word < b.word;
              });
    return lexicon;
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buffer, ptr);
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
    for (const auto& entry : lexicon.entries) {
        if (!(entry.score >= 0.0) || !std::isfinite(entry.score))
            throw std::invalid_argument("lexicon score must be finite and >= 0 (" +
                                        entry.word + ")");
        if (entry.word.empty())
            throw std::invalid_argument("lexicon entry with empty word");
    }
    const Lexicon sorted = normalize(lexicon);
    out << "# lexforge-lexicon v1\n";
    for (const auto& entry : sorted.entries) {
        out << entry.word << '\t' << polarity_name(entry.polarity) << '\t'
            << format_double(entry.score) << '\n';
    }
}

ParseResult<Lexicon> read_lexicon(std::istream& in) {
    ParseResult<Lexicon> result;
    std::set<std::pair<std::string, Polarity>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 3) {
            result.diagnostics.push_back({line_no, "expected 3 fields"});
            continue;
        }
        LexiconEntry entry;
        entry.word = std::string(fields[0]);
        if (fields[1] == "positive")
            entry.polarity = Polarity::positive;
        else if (fields[1] == "negative")
            entry.polarity = Polarity::negative;
        else {
            result.diagnostics.push_back(
                {line_no, "bad polarity '" + std::string(fields[1]) + "'"});
            continue;
        }
        if (entry.word.empty() || !parse_number(fields[2], entry.score) ||
            !std::isfinite(entry.score) || entry.score < 0.0) {
            result.diagnostics.push_back({line_no, "bad word or score"});
            continue;
        }
        if (!seen.insert({entry.word, entry.polarity}).second) {
            result.diagnostics.push_back(
                {line_no, "duplicate entry '" + entry.word + "', kept first"});
            continue;
        }
        result.value.entries.push_back(std::move(entry));
    }
    result.value = normalize(std::move(result.value));
    return result;
}

std::size_t utf8_length(std::string_view text) {
    std::size_t count = 0;
    for (unsigned char byte : text)
        if ((byte & 0xC0) != 0x80) ++count;
    return count;
}

}  // namespace lexforge
