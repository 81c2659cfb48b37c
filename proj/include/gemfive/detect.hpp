#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemfive/graph.hpp"

namespace gemfive {

enum class Pattern { P4, P5, Gem, C5 };

const char* pattern_name(Pattern p);

// Ordered tuple realizing a pattern: path order for P4/P5, path order plus
// apex last for the gem, cyclic order for C5.
struct PatternHit {
    Pattern pattern;
    std::vector<int> vertices;
};

// True iff the ordered tuple induces exactly the named pattern.
bool induces_pattern(const Graph& g, Pattern p, const std::vector<int>& tuple);

// Lexicographically least realizing tuple, if any.
std::optional<PatternHit> find_induced(const Graph& g, Pattern p);

struct FreeCheck {
    bool free;
    std::optional<PatternHit> witness;
};
FreeCheck is_p5_gem_free(const Graph& g);

bool is_p4_free(const Graph& g);

// Every vertex outside x is complete or anticomplete to x.
bool is_homogeneous(const Graph& g, const Bitset& x);

// Connected components of induced(g, s), as host-graph vertex sets.
std::vector<Bitset> components_of(const Graph& g, const Bitset& s);

} // namespace gemfive
