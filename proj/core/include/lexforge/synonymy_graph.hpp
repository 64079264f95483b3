#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexforge/corpus_io.hpp"

namespace lexforge {

// Undirected word graph with cosine edge weights in (0,1]. Nodes are kept
// in lexicographic order so vector indices are reproducible.
struct SynonymyGraph {
    std::vector<std::string> words;               // lexicographic
    std::vector<std::string> pos_tags;            // per node, "unknown" if unsourced
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // symmetric, no self-loops

    std::size_t node_count() const { return words.size(); }
    std::size_t edge_count() const;  // each undirected edge counted once
    std::optional<int> index_of(const std::string& word) const;
};

// Closure of `origin` under the symmetrized synonym relation. Words are
// only added if the thesaurus mentions them; origin words always stay.
// max_rounds bounds the expansion depth (nullopt = run to fixed point).
std::set<std::string> bootstrap_expand(const std::set<std::string>& origin,
                                       const Thesaurus& thesaurus,
                                       std::optional<int> max_rounds = std::nullopt);

// Boolean synonym-membership vector of `word` over the vocab ordering,
// symmetrized (either direction of mention counts). No self component.
std::vector<std::uint8_t> synonym_vector(const std::string& word,
                                         const Thesaurus& thesaurus,
                                         const std::vector<std::string>& vocab);

// Plain cosine of two boolean vectors; 0 if either is all-zero.
double cosine_weight(const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b);

// Build the graph over `vocab`: an edge joins every synonym pair, weighted
// by the cosine of their synonym vectors with the self component set (a
// word counts as its own synonym, so mutual-only pairs keep weight > 0).
// word_pos supplies node POS tags where known.
SynonymyGraph build_graph(const std::set<std::string>& vocab,
                          const Thesaurus& thesaurus,
                          const std::map<std::string, std::string>& word_pos = {});

// Debug dump: word_i<TAB>word_j<TAB>weight, one undirected edge once,
// i < j lexicographically.
void write_graph_dump(const SynonymyGraph& graph, std::ostream& out);

}  // namespace lexforge
