#include "lexforge/evaluation.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "line_parsing.hpp"

namespace lexforge {

namespace {

using detail::next_line;
using detail::parse_token_field;
using detail::split_tabs;

bool parse_label(std::string_view text, HumanLabel& label) {
    if (text == "pos") {
        label = HumanLabel::positive;
    } else if (text == "neg") {
        label = HumanLabel::negative;
    } else if (text == "neu") {
        label = HumanLabel::neutral;
    } else {
        return false;
    }
    return true;
}

}  // namespace

std::set<std::string> GoldLexicon::all() const {
    std::set<std::string> words = positive;
    words.insert(negative.begin(), negative.end());
    return words;
}

double precision_at_n(const LabeledRanking& ranking, int n,
                      const std::set<HumanLabel>& relevant) {
    if (n < 1 || static_cast<std::size_t>(n) > ranking.items.size()) {
        throw std::out_of_range("precision_at_n: n out of range");
    }
    long hits = 0;
    for (int i = 0; i < n; ++i) {
        if (relevant.count(ranking.items[static_cast<std::size_t>(i)].second) > 0) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(n);
}

Prf prf1(const std::set<std::string>& extracted, const std::set<std::string>& gold) {
    if (gold.empty()) {
        throw std::invalid_argument("prf1: gold set is empty");
    }
    std::vector<std::string> overlap;
    std::set_intersection(extracted.begin(), extracted.end(), gold.begin(),
                          gold.end(), std::back_inserter(overlap));
    const double hits = static_cast<double>(overlap.size());

    Prf result;
    result.precision =
        extracted.empty() ? 0.0 : hits / static_cast<double>(extracted.size());
    result.recall = hits / static_cast<double>(gold.size());
    const double sum = result.precision + result.recall;
    result.f1 = sum == 0.0 ? 0.0 : 2.0 * result.precision * result.recall / sum;
    return result;
}

Polarity classify_sentence(std::span<const Token> tokens, const Lexicon& lexicon) {
    const std::set<std::string> positive = lexicon.words(Polarity::positive);
    const std::set<std::string> negative = lexicon.words(Polarity::negative);
    long score = 0;
    for (const Token& token : tokens) {
        if (positive.count(token.surface) > 0) {
            ++score;
        }
        if (negative.count(token.surface) > 0) {
            --score;
        }
    }
    return score < 0 ? Polarity::negative : Polarity::positive;
}

double evaluate_classification(std::span<const ClassifiedSentence> dataset,
                               const Lexicon& lexicon) {
    if (dataset.empty()) {
        throw std::invalid_argument("evaluate_classification: empty dataset");
    }
    long correct = 0;
    for (const ClassifiedSentence& sentence : dataset) {
        if (classify_sentence(sentence.tokens, lexicon) == sentence.gold) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(dataset.size());
}

ParseResult<std::vector<ClassifiedSentence>> read_classification_dataset(
    std::istream& in) {
    ParseResult<std::vector<ClassifiedSentence>> result;
    std::string line;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string_view> fields = split_tabs(line);
        if (fields.size() != 2) {
            result.diagnostics.push_back(
                {line_number, "expected label<TAB>tokens"});
            continue;
        }
        ClassifiedSentence sentence;
        if (fields[0] == "pos") {
            sentence.gold = Polarity::positive;
        } else if (fields[0] == "neg") {
            sentence.gold = Polarity::negative;
        } else {
            result.diagnostics.push_back(
                {line_number, "unknown label '" + std::string(fields[0]) + "'"});
            continue;
        }
        if (!parse_token_field(fields[1], sentence.tokens) ||
            sentence.tokens.empty()) {
            result.diagnostics.push_back({line_number, "malformed token field"});
            continue;
        }
        result.value.push_back(std::move(sentence));
    }
    return result;
}

ParseResult<std::map<std::string, HumanLabel>> read_word_labels(std::istream& in) {
    ParseResult<std::map<std::string, HumanLabel>> result;
    std::string line;
    std::size_t line_number = 0;
    while (next_line(in, line)) {
        ++line_number;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::vector<std::string_view> fields = split_tabs(line);
        HumanLabel label{};
        if (fields.size() != 2 || fields[0].empty() ||
            !parse_label(fields[1], label)) {
            result.diagnostics.push_back(
                {line_number, "expected word<TAB>pos|neg|neu"});
            continue;
        }
        result.value[std::string(fields[0])] = label;
    }
    return result;
}

LabeledRanking apply_labels(const std::vector<std::string>& ranked_words,
                            const std::map<std::string, HumanLabel>& labels) {
    LabeledRanking ranking;
    for (const std::string& word : ranked_words) {
        auto it = labels.find(word);
        ranking.items.emplace_back(
            word, it == labels.end() ? HumanLabel::neutral : it->second);
    }
    return ranking;
}

}  // namespace lexforge
