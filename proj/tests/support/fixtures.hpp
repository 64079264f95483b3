#pragma once

// Shared fixture builders: scratch directories, a synthetic parsed corpus
// with known sentiment words planted in fixed dependency shapes, and a
// miniature end-to-end input set for the pipeline stages.

#include <filesystem>
#include <string>
#include <vector>

#include "lexforge/synonymy_graph.hpp"

namespace testsupport {

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Corpus where 20 planted adjectives modify 5 frequent nouns through 3
// fixed dependency shapes, plus filler adjectives that never touch a
// frequent noun. The first 5 planted words act as the general lexicon;
// extraction should recover the other 15 and none of the fillers.
struct PlantedCorpus {
    std::string conll;
    std::vector<std::string> general;  // planted words given up front
    std::vector<std::string> hidden;   // planted words to recover
    std::vector<std::string> fillers;
    std::vector<std::string> targets;
};

PlantedCorpus make_planted_corpus();

// Writes comments, thesaurus, parsed corpus, gold lexicon, word labels,
// classification dataset, and a config wired to them. Returns the config
// path; stages write into dir/"out" unless overridden.
std::filesystem::path write_pipeline_fixture(const std::filesystem::path& dir);

// Library graph over nodes n00..n{n-1} from a dense symmetric adjacency.
lexforge::SynonymyGraph graph_from_dense(
    const std::vector<std::vector<double>>& adjacency);

}  // namespace testsupport
