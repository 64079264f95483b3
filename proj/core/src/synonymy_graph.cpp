#include "lexforge/synonymy_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace lexforge {

namespace {

constexpr double kWeightFloor = 1e-6;  // synonym pairs never lose their edge

// Symmetrized neighbor map over the thesaurus.
std::map<std::string, std::set<std::string>> undirected_synonyms(
    const Thesaurus& thesaurus) {
    std::map<std::string, std::set<std::string>> neighbors;
    for (const auto& [head, synonyms] : thesaurus.entries) {
        for (const auto& synonym : synonyms) {
            neighbors[head].insert(synonym);
            neighbors[synonym].insert(head);
        }
    }
    return neighbors;
}

}  // namespace

std::size_t SynonymyGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency) twice += row.size();
    return twice / 2;
}

std::optional<int> SynonymyGraph::index_of(const std::string& word) const {
    auto it = std::find(words.begin(), words.end(), word);
    if (it == words.end()) return std::nullopt;
    return static_cast<int>(it - words.begin());
}

std::set<std::string> bootstrap_expand(const std::set<std::string>& origin,
                                       const Thesaurus& thesaurus,
                                       std::optional<int> max_rounds) {
    const auto neighbors = undirected_synonyms(thesaurus);

    std::set<std::string> closed = origin;
    std::vector<std::string> frontier(origin.begin(), origin.end());
    int round = 0;
    while (!frontier.empty()) {
        if (max_rounds && round >= *max_rounds) break;
        ++round;
        std::vector<std::string> next;
        for (const auto& word : frontier) {
            auto it = neighbors.find(word);
            if (it == neighbors.end()) continue;
            for (const auto& synonym : it->second) {
                if (closed.insert(synonym).second) next.push_back(synonym);
            }
        }
        frontier = std::move(next);
    }
    return closed;
}

std::vector<std::uint8_t> synonym_vector(const std::string& word,
                                         const Thesaurus& thesaurus,
                                         const std::vector<std::string>& vocab) {
    auto self = std::find(vocab.begin(), vocab.end(), word);
    if (self == vocab.end())
        throw std::domain_error("synonym_vector: word not in vocab: " + word);

    std::vector<std::uint8_t> vec(vocab.size(), 0);
    const std::set<std::string>* own = thesaurus.find(word);
    for (std::size_t k = 0; k < vocab.size(); ++k) {
        if (vocab[k] == word) continue;
        bool synonym = own && own->count(vocab[k]) > 0;
        if (!synonym) {
            const std::set<std::string>* theirs = thesaurus.find(vocab[k]);
            synonym = theirs && theirs->count(word) > 0;
        }
        vec[k] = synonym ? 1 : 0;
    }
    return vec;
}

double cosine_weight(const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b) {
    if (a.size() != b.size())
        throw std::domain_error("cosine_weight: vector length mismatch");
    long dot = 0, na = 0, nb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        dot += a[k] && b[k];
        na += a[k] != 0;
        nb += b[k] != 0;
    }
    if (na == 0 || nb == 0) return 0.0;
    // sqrt of the exact integer product keeps the result in (0, 1]: equal
    // sets give exactly 1.0, anything else stays strictly below it.
    return static_cast<double>(dot) /
           std::sqrt(static_cast<double>(na) * static_cast<double>(nb));
}

SynonymyGraph build_graph(const std::set<std::string>& vocab,
                          const Thesaurus& thesaurus,
                          const std::map<std::string, std::string>& word_pos) {
    SynonymyGraph graph;
    graph.words.assign(vocab.begin(), vocab.end());  // set iteration = lexicographic
    const int n = static_cast<int>(graph.words.size());

    graph.pos_tags.reserve(n);
    for (const auto& word : graph.words) {
        auto it = word_pos.find(word);
        graph.pos_tags.push_back(it == word_pos.end() ? "unknown" : it->second);
    }

    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[graph.words[i]] = i;

    const auto neighbors = undirected_synonyms(thesaurus);

    // Augmented synonym sets as sorted index lists: the word itself plus
    // every in-vocab synonym. Cosine of boolean vectors reduces to
    // intersection size over the geometric mean of set sizes.
    std::vector<std::vector<int>> synsets(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int>& synset = synsets[i];
        synset.push_back(i);
        auto it = neighbors.find(graph.words[i]);
        if (it != neighbors.end()) {
            for (const auto& synonym : it->second) {
                auto pos = index.find(synonym);
                if (pos != index.end() && pos->second != i)
                    synset.push_back(pos->second);
            }
        }
        std::sort(synset.begin(), synset.end());
    }

    auto intersection_size = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        long count = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (a[i] > b[j])
                ++j;
            else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    };

    graph.adjacency.assign(n, {});
    for (int i = 0; i < n; ++i) {
        auto it = neighbors.find(graph.words[i]);
        if (it == neighbors.end()) continue;
        for (const auto& synonym : it->second) {
            auto pos = index.find(synonym);
            if (pos == index.end()) continue;
            const int j = pos->second;
            if (j <= i) continue;  // handle each pair once
            const long dot = intersection_size(synsets[i], synsets[j]);
            // sqrt of the exact integer product, as in cosine_weight, so
            // the weight cannot creep above 1.0.
            double weight =
                static_cast<double>(dot) /
                std::sqrt(static_cast<double>(synsets[i].size()) *
                          static_cast<double>(synsets[j].size()));
            weight = std::max(weight, kWeightFloor);
            graph.adjacency[i].emplace_back(j, weight);
            graph.adjacency[j].emplace_back(i, weight);
        }
    }
    for (auto& row : graph.adjacency) std::sort(row.begin(), row.end());

    return graph;
}

void write_graph_dump(const SynonymyGraph& graph, std::ostream& out) {
    for (std::size_t i = 0; i < graph.words.size(); ++i) {
        for (const auto& [j, weight] : graph.adjacency[i]) {
            if (static_cast<std::size_t>(j) <= i) continue;
            out << graph.words[i] << '\t' << graph.words[j] << '\t'
                << format_double(weight) << '\n';
        }
    }
}

}  // namespace lexforge
