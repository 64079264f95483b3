#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lexforge {

// One surface token with its POS tag. Tokens arrive pre-segmented and
// pre-tagged; this library never tokenizes raw text.
struct Token {
    std::string surface;
    std::string pos;

    bool operator==(const Token&) const = default;
};

// One user review: rating plus tokenized overall/pros/cons fields.
struct CommentRecord {
    double rating = 0.0;
    std::vector<Token> overall;
    std::vector<Token> pros;
    std::vector<Token> cons;
};

// Word -> synonym set. Self-mentions dropped, duplicate entries merged.
struct Thesaurus {
    std::map<std::string, std::set<std::string>> entries;

    const std::set<std::string>* find(const std::string& word) const;
};

struct ParsedToken {
    int index = 0;  // 1-based position
    std::string surface;
    std::string pos;
    int head = 0;  // 0 = root
    std::string deprel;
};

// One dependency-parsed sentence. Invariant: tokens form a single-rooted
// tree with contiguous 1..n indices (enforced by the corpus parser).
struct ParsedSentence {
    std::vector<ParsedToken> tokens;

    std::size_t size() const { return tokens.size(); }
};

enum class Polarity { positive, negative };

const char* polarity_name(Polarity p);

struct LexiconEntry {
    std::string word;
    Polarity polarity = Polarity::positive;
    double score = 0.0;

    bool operator==(const LexiconEntry&) const = default;
};

struct Lexicon {
    std::vector<LexiconEntry> entries;

    bool contains(const std::string& word) const;
    std::set<std::string> words() const;
    std::set<std::string> words(Polarity p) const;
};

// A recoverable ingestion problem: the offending record was skipped.
struct ParseDiagnostic {
    std::size_t line = 0;
    std::string message;
};

template <class T>
struct ParseResult {
    T value{};
    std::vector<ParseDiagnostic> diagnostics;

    bool clean() const { return diagnostics.empty(); }
};

// Comments file: one record per line, 4 tab-separated fields
// (rating, overall, pros, cons), each field space-separated surface_POS
// tokens. Malformed lines are skipped with a diagnostic.
ParseResult<std::vector<CommentRecord>> parse_comments(std::istream& in);

// Thesaurus file: one entry per line, whitespace-separated words, first
// word is the headword. Duplicate headword lines are unioned.
Thesaurus parse_thesaurus(std::istream& in);

// CoNLL-like blocks: >=5 tab-separated columns ID FORM POS HEAD DEPREL,
// blank-line separated, '#' lines ignored. Blocks violating the tree
// invariant are rejected whole, with the sentence ordinal in the message.
ParseResult<std::vector<ParsedSentence>> parse_parsed_corpus(std::istream& in);

// Lexicon file: "# lexforge-lexicon v1" header then word<TAB>polarity<TAB>score.
// write_lexicon normalizes ordering to (polarity, score desc, word).
void write_lexicon(const Lexicon& lexicon, std::ostream& out);
ParseResult<Lexicon> read_lexicon(std::istream& in);

// Sort into the canonical lexicon-file order.
Lexicon normalize(Lexicon lexicon);

// Number of code points in a UTF-8 string (word length is measured in
// characters, not bytes).
std::size_t utf8_length(std::string_view text);

// Shortest round-trip decimal rendering; all file formats use it so that
// identical values always serialize identically.
std::string format_double(double value);

}  // namespace lexforge
