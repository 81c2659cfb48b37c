#pragma once

#include <optional>
#include <stdexcept>

#include "gemfive/coloring.hpp"
#include "gemfive/graph.hpp"

namespace gemfive {

// ceil(5*omega/4)
inline int bound54(int omega) { return (5 * omega + 3) / 4; }
// ceil((delta+omega+1)/2)
inline int reed_bound(int delta, int omega) { return (delta + omega + 2) / 2; }

struct exact_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-chi vertex threshold: GEMFIVE_EXACT_LIMIT env var, default 20.
int exact_limit();

// One maximum clique (Bron-Kerbosch with pivoting).
Bitset max_clique(const Graph& g);
int clique_number(const Graph& g);

// All cliques of maximum size. Every omega-clique is a maximal clique.
std::vector<Bitset> all_maximum_cliques(const Graph& g);

// Exact chromatic number via DSATUR branch and bound. Throws
// exact_limit_error when n exceeds `limit` (default: exact_limit()).
int chi_exact(const Graph& g, int limit);
int chi_exact(const Graph& g);

// Optimal coloring, same solver, no vertex threshold (engine-internal use).
Coloring exact_color(const Graph& g);

// Total and proper.
bool verify_coloring(const Graph& g, const Coloring& c);

// s is stable and meets every maximum clique.
bool is_good_stable_set(const Graph& g, const Bitset& s);

// chi_exact <= ceil((Delta+omega+1)/2); subject to the exact threshold.
bool reed_check(const Graph& g);

struct OracleReport {
    int omega = 0;
    std::optional<int> chi;
    int delta = 0;
    int bound54 = 0;
    int reed = 0;
};
OracleReport oracle_report(const Graph& g);

} // namespace gemfive
