#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexforge/corpus_io.hpp"
#include "lexforge/synonymy_graph.hpp"

namespace lexforge {

// Per-node teleport weights: nonnegative, summing to 1.
struct TeleportDistribution {
    std::vector<double> weights;

    void validate() const;  // throws std::invalid_argument on violation
};

// One PageRank result. Scores are nonnegative and sum to 1.
struct RankVector {
    std::vector<double> scores;
    int iterations = 0;
    double residual = 0.0;  // final L1 change
    bool converged = true;
};

struct PropagationConfig {
    double alpha = 0.85;    // damping
    double beta = 0.0;      // weight of the POS-topic run in the mix
    double tol = 1e-8;      // L1 convergence threshold
    int max_iter = 200;
    int top_k = 200;
    std::set<std::string> topic_pos_tags = {"a"};

    void validate() const;
};

// Row-stochastic random-walk transition over the graph, CSR layout.
// Zero-degree nodes are marked dangling.
struct TransitionMatrix {
    std::vector<int> offsets;   // size n+1
    std::vector<int> targets;
    std::vector<double> probs;
    std::vector<int> dangling;  // node indices with no outgoing edges

    std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

TransitionMatrix row_stochastic_transition(const SynonymyGraph& graph);

struct SeedTeleportResult {
    TeleportDistribution dist;
    int matched = 0;
    int skipped = 0;  // seeds not present in the graph
};

// Uniform teleport over the seed words found in the graph. Throws if none
// of the seeds is a graph node.
SeedTeleportResult make_teleport_seeds(const SynonymyGraph& graph,
                                       const std::vector<std::string>& seed_words);

// Uniform teleport over nodes whose POS tag is in `tags`. Throws if no
// node matches.
TeleportDistribution make_teleport_pos(const SynonymyGraph& graph,
                                       const std::set<std::string>& tags);

using IterateObserver = std::function<void(int iteration, std::span<const double> iterate)>;

// Power iteration of x^k = alpha*(P^T x + dangling_mass*e) + (1-alpha)*e
// from x^0 = e. Stops when the L1 change drops below cfg.tol; if max_iter
// is hit first the result carries converged = false.
RankVector pagerank(const TransitionMatrix& transition,
                    const TeleportDistribution& teleport,
                    const PropagationConfig& cfg,
                    const IterateObserver& observer = {});

// Convex mix beta*x1 + (1-beta)*x2 componentwise.
RankVector combine(const RankVector& x1, const RankVector& x2, double beta);

// Top-K of each polarity ranking as a lexicon. A word landing in both
// lists keeps the polarity with the higher score (tie -> positive) and is
// dropped from the other list without replacement.
Lexicon top_k_general_words(const SynonymyGraph& graph,
                            const RankVector& positive_rank,
                            const RankVector& negative_rank,
                            int k,
                            const std::set<std::string>& exclusions = {});

// Debug dump: word<TAB>score<TAB>rank, descending.
void write_rank_dump(const SynonymyGraph& graph, const RankVector& rank,
                     std::ostream& out);

}  // namespace lexforge
