#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gemfive/bitset.hpp"

namespace gemfive {

// Simple undirected graph on vertex ids 0..n-1, bitset adjacency rows.
// Immutable after construction; algorithms take const references.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), labels_(n) {}

    int n() const { return n_; }
    int m() const { return m_; }

    void add_edge(int u, int v)
    {
        if (u == v)
            throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex id out of range");
        if (adj_[u].test(v))
            return; // duplicate edges are idempotent
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    Bitset full_set() const
    {
        Bitset b(n_);
        for (int v = 0; v < n_; ++v)
            b.set(v);
        return b;
    }

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    // v complete to s (adjacent to every member; v itself must not be in s)
    bool complete_to(int v, const Bitset& s) const { return s.is_subset_of(adj_[v]); }
    bool anticomplete_to(int v, const Bitset& s) const { return !adj_[v].intersects(s); }
    // [x,y] complete / empty, for disjoint sets
    bool sets_complete(const Bitset& x, const Bitset& y) const
    {
        for (int v : iterate(x))
            if (!complete_to(v, y))
                return false;
        return true;
    }
    bool sets_anticomplete(const Bitset& x, const Bitset& y) const
    {
        for (int v : iterate(x))
            if (!anticomplete_to(v, y))
                return false;
        return true;
    }
    bool is_clique(const Bitset& s) const
    {
        for (int v : iterate(s)) {
            Bitset rest = s;
            rest.reset(v);
            if (!rest.is_subset_of(adj_[v]))
                return false;
        }
        return true;
    }
    bool is_stable(const Bitset& s) const
    {
        for (int v : iterate(s))
            if (adj_[v].intersects(s))
                return false;
        return true;
    }

    bool is_connected() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line)
    {
    }
};

// DIMACS-style format: "c ..." comments, "p edge <n> <m>", then "e <u> <v>"
// with 1-based vertex ids. Internally 0-based.
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

struct InducedResult {
    Graph graph;
    std::vector<int> origin; // origin[new id] = old id, ascending
};
InducedResult induced(const Graph& g, const Bitset& s);

// Connected components of the whole graph, as host vertex sets.
std::vector<Bitset> graph_components(const Graph& g);

// Brute-force isomorphism test for small graphs (n <= 10 or so).
bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace gemfive
