#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexforge/corpus_io.hpp"

namespace lexforge {

// A scored seed candidate. sps = cp/(cp+cn), sns is its exact complement.
struct SeedCandidate {
    std::string word;
    std::string pos;
    long cp = 0;  // occurrences in pros fields
    long cn = 0;  // occurrences in cons fields
    double sps = 0.0;
    double sns = 0.0;

    long frequency() const { return cp + cn; }
};

struct SeedSelectionConfig {
    double lambda_p = 0.75;  // positive-score threshold (strict >)
    double lambda_n = 0.70;  // negative-score threshold (strict >)
    long min_freq = 30;
    int min_len = 2;  // surface length in characters
    std::set<std::string> seed_pos_tags = {"a", "i"};
};

struct PolarityCounts {
    long cp = 0;
    long cn = 0;
    std::map<std::string, long> by_pos;  // tag -> occurrences, for majority tag
};

// Count pros/cons occurrences of every token whose POS tag is in
// seed_pos_tags. Counts are independent of record order.
std::map<std::string, PolarityCounts> count_polarity_frequencies(
    std::span<const CommentRecord> comments,
    const std::set<std::string>& seed_pos_tags);

// (sps, sns) for one candidate. Requires cp + cn > 0.
std::pair<double, double> score_seed(long cp, long cn);

// Counts -> scored candidates, ordered by word. The candidate POS tag is
// the majority tag among counted occurrences (ties lexicographic).
std::vector<SeedCandidate> score_candidates(
    const std::map<std::string, PolarityCounts>& counts);

// Apply the three selection rules (length, frequency, score threshold).
// Each list is sorted by score desc, then frequency desc, then word.
std::pair<std::vector<SeedCandidate>, std::vector<SeedCandidate>> select_seeds(
    const std::vector<SeedCandidate>& candidates, const SeedSelectionConfig& cfg);

// Seed lists as lexicons (score column = sps resp. sns).
Lexicon seeds_to_lexicon(const std::vector<SeedCandidate>& seeds, Polarity polarity);

}  // namespace lexforge
