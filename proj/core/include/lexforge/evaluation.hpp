#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexforge/corpus_io.hpp"

namespace lexforge {

enum class HumanLabel { positive, negative, neutral };

// System ranking annotated with human labels, for P@N.
struct LabeledRanking {
    std::vector<std::pair<std::string, HumanLabel>> items;
};

struct GoldLexicon {
    std::set<std::string> positive;
    std::set<std::string> negative;

    std::set<std::string> all() const;
};

// Fraction of the top n whose label is in `relevant`. Requires
// 1 <= n <= ranking size.
double precision_at_n(const LabeledRanking& ranking, int n,
                      const std::set<HumanLabel>& relevant);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Set precision/recall/F1 of extracted vs gold. Gold must be non-empty.
Prf prf1(const std::set<std::string>& extracted, const std::set<std::string>& gold);

// Bag-of-words lexicon vote: positive iff the positive hit count is >=
// the negative hit count (ties, including zero matches, go positive).
Polarity classify_sentence(std::span<const Token> tokens, const Lexicon& lexicon);

struct ClassifiedSentence {
    std::vector<Token> tokens;
    Polarity gold = Polarity::positive;
};

// Accuracy of classify_sentence over the dataset. Dataset must be
// non-empty.
double evaluate_classification(std::span<const ClassifiedSentence> dataset,
                               const Lexicon& lexicon);

// Dataset file: one sentence per line, label<TAB>surface_POS tokens,
// label in {pos, neg}.
ParseResult<std::vector<ClassifiedSentence>> read_classification_dataset(
    std::istream& in);

// Word label file: word<TAB>label, label in {pos, neg, neu}.
ParseResult<std::map<std::string, HumanLabel>> read_word_labels(std::istream& in);

// Attach labels to a ranking; unlabeled words count as neutral.
LabeledRanking apply_labels(const std::vector<std::string>& ranked_words,
                            const std::map<std::string, HumanLabel>& labels);

}  // namespace lexforge
