#include "lexforge/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace lexforge {

void TeleportDistribution::validate() const {
    double sum = 0.0;
    bool any_positive = false;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("teleport weight negative or not finite");
        if (w > 0.0) any_positive = true;
        sum += w;
    }
    if (!any_positive)
        throw std::invalid_argument("teleport distribution has no positive weight");
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("teleport distribution does not sum to 1");
}

void PropagationConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must be in (0,1)");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must be in [0,1]");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
}

TransitionMatrix row_stochastic_transition(const SynonymyGraph& graph) {
    const int n = static_cast<int>(graph.node_count());
    TransitionMatrix transition;
    transition.offsets.reserve(n + 1);
    transition.offsets.push_back(0);
    for (int i = 0; i < n; ++i) {
        const auto& row = graph.adjacency[i];
        double total = 0.0;
        for (const auto& [_, weight] : row) total += weight;
        if (total <= 0.0) {
            transition.dangling.push_back(i);
        } else {
            for (const auto& [target, weight] : row) {
                transition.targets.push_back(target);
                transition.probs.push_back(weight / total);
            }
        }
        transition.offsets.push_back(static_cast<int>(transition.targets.size()));
    }
    return transition;
}

SeedTeleportResult make_teleport_seeds(const SynonymyGraph& graph,
                                       const std::vector<std::string>& seed_words) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < graph.words.size(); ++i)
        index[graph.words[i]] = static_cast<int>(i);

    SeedTeleportResult result;
    std::set<int> matched;
    for (const auto& word : seed_words) {
        auto it = index.find(word);
        if (it == index.end())
            ++result.skipped;
        else
            matched.insert(it->second);
    }
    if (matched.empty())
        throw std::domain_error(
            "no seed word is present in the graph; seed topic undefined");

    result.matched = static_cast<int>(matched.size());
    result.dist.weights.assign(graph.node_count(), 0.0);
    const double mass = 1.0 / static_cast<double>(matched.size());
    for (int node : matched) result.dist.weights[node] = mass;
    return result;
}

TeleportDistribution make_teleport_pos(const SynonymyGraph& graph,
                                       const std::set<std::string>& tags) {
    std::vector<int> matched;
    for (std::size_t i = 0; i < graph.pos_tags.size(); ++i)
        if (tags.count(graph.pos_tags[i])) matched.push_back(static_cast<int>(i));
    if (matched.empty())
        throw std::domain_error("no graph node carries a requested POS tag");

    TeleportDistribution dist;
    dist.weights.assign(graph.node_count(), 0.0);
    const double mass = 1.0 / static_cast<double>(matched.size());
    for (int node : matched) dist.weights[node] = mass;
    return dist;
}

RankVector pagerank(const TransitionMatrix& transition,
                    const TeleportDistribution& teleport,
                    const PropagationConfig& cfg,
                    const IterateObserver& observer) {
    cfg.validate();
    teleport.validate();
    const std::size_t n = transition.size();
    if (n == 0) throw std::invalid_argument("pagerank on an empty graph");
    if (teleport.weights.size() != n)
        throw std::invalid_argument("teleport size does not match graph");

    const std::vector<double>& e = teleport.weights;
    RankVector result;
    result.scores = e;  // x^0 = e
    if (observer) observer(0, result.scores);

    std::vector<double> next(n);
    for (int iteration = 1; iteration <= cfg.max_iter; ++iteration) {
        const std::vector<double>& x = result.scores;

        double dangling_mass = 0.0;
        for (int node : transition.dangling) dangling_mass += x[node];

        for (std::size_t i = 0; i < n; ++i)
            next[i] = (cfg.alpha * dangling_mass + (1.0 - cfg.alpha)) * e[i];
        for (std::size_t i = 0; i < n; ++i) {
            const double push = cfg.alpha * x[i];
            if (push == 0.0) continue;
            for (int k = transition.offsets[i]; k < transition.offsets[i + 1]; ++k)
                next[transition.targets[k]] += push * transition.probs[k];
        }

        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - x[i]);

        result.scores.swap(next);
        result.iterations = iteration;
        result.residual = change;
        if (observer) observer(iteration, result.scores);
        if (change < cfg.tol) {
            result.converged = true;
            return result;
        }
    }
    result.converged = false;
    return result;
}

RankVector combine(const RankVector& x1, const RankVector& x2, double beta) {
    if (x1.scores.size() != x2.scores.size())
        throw std::invalid_argument("combine: dimension mismatch");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("combine: beta must be in [0,1]");

    RankVector result;
    result.scores.resize(x1.scores.size());
    for (std::size_t i = 0; i < x1.scores.size(); ++i)
        result.scores[i] = beta * x1.scores[i] + (1.0 - beta) * x2.scores[i];
    result.iterations = std::max(x1.iterations, x2.iterations);
    result.residual = std::max(x1.residual, x2.residual);
    result.converged = x1.converged && x2.converged;
    return result;
}

namespace {

// Indices ordered by score desc, then word asc.
std::vector<int> ranked_indices(const SynonymyGraph& graph,
                                const RankVector& rank,
                                const std::set<std::string>& exclusions) {
    std::vector<int> order;
    order.reserve(graph.node_count());
    for (std::size_t i = 0; i < graph.node_count(); ++i)
        if (!exclusions.count(graph.words[i])) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rank.scores[a] != rank.scores[b]) return rank.scores[a] > rank.scores[b];
        return graph.words[a] < graph.words[b];
    });
    return order;
}

}  // namespace

Lexicon top_k_general_words(const SynonymyGraph& graph,
                            const RankVector& positive_rank,
                            const RankVector& negative_rank,
                            int k,
                            const std::set<std::string>& exclusions) {
    if (positive_rank.scores.size() != graph.node_count() ||
        negative_rank.scores.size() != graph.node_count())
        throw std::invalid_argument("rank vectors do not match the graph");
    if (k < 1) throw std::invalid_argument("k must be >= 1");

    const auto pos_order = ranked_indices(graph, positive_rank, exclusions);
    const auto neg_order = ranked_indices(graph, negative_rank, exclusions);
    const std::size_t take =
        std::min<std::size_t>(static_cast<std::size_t>(k), pos_order.size());

    std::map<int, double> pos_top, neg_top;
    for (std::size_t i = 0; i < take; ++i)
        pos_top[pos_order[i]] = positive_rank.scores[pos_order[i]];
    for (std::size_t i = 0; i < take; ++i)
        neg_top[neg_order[i]] = negative_rank.scores[neg_order[i]];

    // A word in both lists keeps the higher-scoring polarity; equal scores
    // go positive. No replacement is pulled up.
    for (auto it = pos_top.begin(); it != pos_top.end();) {
        auto other = neg_top.find(it->first);
        if (other != neg_top.end()) {
            if (other->second > it->second) {
                it = pos_top.erase(it);
                continue;
            }
            neg_top.erase(other);
        }
        ++it;
    }

    Lexicon lexicon;
    for (const auto& [node, score] : pos_top)
        lexicon.entries.push_back({graph.words[node], Polarity::positive, score});
    for (const auto& [node, score] : neg_top)
        lexicon.entries.push_back({graph.words[node], Polarity::negative, score});
    return normalize(std::move(lexicon));
}

void write_rank_dump(const SynonymyGraph& graph, const RankVector& rank,
                     std::ostream& out) {
    const auto order = ranked_indices(graph, rank, {});
    for (std::size_t r = 0; r < order.size(); ++r) {
        out << graph.words[order[r]] << '\t' << format_double(rank.scores[order[r]])
            << '\t' << (r + 1) << '\n';
    }
}

}  // namespace lexforge
