#pragma once

#include <string>
#include <vector>

#include "gemfive/graph.hpp"

namespace gemfive {

// One of the ten base graphs, with the machine-checkable constraints the
// coloring proofs impose on it (stability, cliques, neighborhood equalities).
struct BasicGraphSpec {
    int id = 0;
    Graph graph;
    std::vector<std::vector<int>> stable_sets;           // 0-based vertex lists
    std::vector<std::vector<int>> cliques;               // must induce cliques
    std::vector<std::pair<int, std::vector<int>>> exact_neighborhoods; // N(v) == set
};

// k in 1..10; throws std::out_of_range otherwise.
const BasicGraphSpec& basic_graph(int k);

struct ValidationIssue {
    int k;
    std::string what;
};
struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Checks, for each k: (P5,gem)-free, contains an induced C5, and every
// constraint in the spec holds. The gate for trusting the transcription.
ValidationReport validate_basic_graphs();

// Same checks against a caller-supplied spec (mutation testing).
void validate_spec_into(const BasicGraphSpec& spec, ValidationReport& report);

} // namespace gemfive
