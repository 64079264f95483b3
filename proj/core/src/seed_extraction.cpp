#include "lexforge/seed_extraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexforge {

std::map<std::string, PolarityCounts> count_polarity_frequencies(
    std::span<const CommentRecord> comments,
    const std::set<std::string>& seed_pos_tags) {
    std::map<std::string, PolarityCounts> counts;
    auto tally = [&](const std::vector<Token>& tokens, bool pros) {
        for (const Token& token : tokens) {
            if (!seed_pos_tags.count(token.pos)) continue;
            PolarityCounts& entry = counts[token.surface];
            (pros ? entry.cp : entry.cn) += 1;
            entry.by_pos[token.pos] += 1;
        }
    };
    for (const CommentRecord& comment : comments) {
        tally(comment.pros, true);
        tally(comment.cons, false);
    }
    return counts;
}

std::pair<double, double> score_seed(long cp, long cn) {
    if (cp < 0 || cn < 0 || cp + cn <= 0)
        throw std::domain_error("score_seed requires cp >= 0, cn >= 0, cp + cn > 0");
    const double sps = static_cast<double>(cp) / static_cast<double>(cp + cn);
    // The complement keeps sps + sns == 1 exactly in floating point; a
    // second division cn/(cp+cn) does not.
    const double sns = 1.0 - sps;
    return {sps, sns};
}

std::vector<SeedCandidate> score_candidates(
    const std::map<std::string, PolarityCounts>& counts) {
    std::vector<SeedCandidate> candidates;
    candidates.reserve(counts.size());
    for (const auto& [word, entry] : counts) {
        SeedCandidate candidate;
        candidate.word = word;
        candidate.cp = entry.cp;
        candidate.cn = entry.cn;
        std::tie(candidate.sps, candidate.sns) = score_seed(entry.cp, entry.cn);
        long best = -1;
        for (const auto& [tag, count] : entry.by_pos) {
            if (count > best) {  // map order breaks ties lexicographically
                best = count;
                candidate.pos = tag;
            }
        }
        candidates.push_back(std::move(candidate));
    }
    return candidates;
}

namespace {

void sort_seed_list(std::vector<SeedCandidate>& seeds, bool positive) {
    std::sort(seeds.begin(), seeds.end(),
              [positive](const SeedCandidate& a, const SeedCandidate& b) {
                  const double sa = positive ? a.sps : a.sns;
                  const double sb = positive ? b.sps : b.sns;
                  if (sa != sb) return sa > sb;
                  if (a.frequency() != b.frequency())
                      return a.frequency() > b.frequency();
                  return a.word < b.word;
              });
}

}  // namespace

std::pair<std::vector<SeedCandidate>, std::vector<SeedCandidate>> select_seeds(
    const std::vector<SeedCandidate>& candidates, const SeedSelectionConfig& cfg) {
    std::vector<SeedCandidate> positive, negative;
    for (const SeedCandidate& candidate : candidates) {
        if (utf8_length(candidate.word) < static_cast<std::size_t>(cfg.min_len))
            continue;
        if (candidate.frequency() < cfg.min_freq) continue;
        if (candidate.sps > cfg.lambda_p) positive.push_back(candidate);
        if (candidate.sns > cfg.lambda_n) negative.push_back(candidate);
    }
    sort_seed_list(positive, true);
    sort_seed_list(negative, false);
    return {std::move(positive), std::move(negative)};
}

Lexicon seeds_to_lexicon(const std::vector<SeedCandidate>& seeds, Polarity polarity) {
    Lexicon lexicon;
    for (const SeedCandidate& seed : seeds) {
        lexicon.entries.push_back(
            {seed.word, polarity,
             polarity == Polarity::positive ? seed.sps : seed.sns});
    }
    return lexicon;
}

}  // namespace lexforge
