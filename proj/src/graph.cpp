#include "gemfive/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gemfive {

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    Bitset seen(n_);
    std::vector<int> stack = {0};
    seen.set(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : iterate(adj_[v]))
            if (!seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
            }
    }
    return seen.count() == n_;
}

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            if (n >= 0)
                throw parse_error(lineno, "duplicate problem line");
            std::string p, fmt;
            ls >> p >> fmt >> n >> m;
            if (!ls || p != "p" || fmt != "edge" || n < 0 || m < 0)
                throw parse_error(lineno, "malformed header");
            g = Graph(n);
        } else if (line[0] == 'e') {
            if (n < 0)
                throw parse_error(lineno, "edge before problem line");
            std::string e;
            int u, v;
            ls >> e >> u >> v;
            if (!ls || e != "e")
                throw parse_error(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error(lineno, "vertex id out of range");
            if (u == v)
                throw parse_error(lineno, "self-loop");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        } else {
            throw parse_error(lineno, "unrecognized line");
        }
    }
    if (n < 0)
        throw parse_error(lineno, "missing problem line");
    if (edges_seen != m)
        throw parse_error(lineno, "edge count mismatch: header says " + std::to_string(m)
                + ", file has " + std::to_string(edges_seen));
    return g;
}

std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

InducedResult induced(const Graph& g, const Bitset& s)
{
    InducedResult r;
    r.origin = s.to_vector();
    int k = int(r.origin.size());
    std::vector<int> newid(g.n(), -1);
    for (int i = 0; i < k; ++i)
        newid[r.origin[i]] = i;
    r.graph = Graph(k);
    for (int i = 0; i < k; ++i) {
        r.graph.set_label(i, g.label(r.origin[i]));
        for (int old : iterate(g.neighbors(r.origin[i]) & s))
            if (newid[old] > i)
                r.graph.add_edge(i, newid[old]);
    }
    return r;
}

std::vector<Bitset> graph_components(const Graph& g)
{
    std::vector<Bitset> comps;
    Bitset seen(g.n());
    for (int s = 0; s < g.n(); ++s) {
        if (seen.test(s))
            continue;
        Bitset comp(g.n());
        std::vector<int> stack = {s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : iterate(g.neighbors(v)))
                if (!seen.test(u)) {
                    seen.set(u);
                    comp.set(u);
                    stack.push_back(u);
                }
        }
        comps.push_back(comp);
    }
    return comps;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used, int v)
{
    if (v == a.n())
        return true;
    for (int w = 0; w < b.n(); ++w) {
        if (used[w] || a.degree(v) != b.degree(w))
            continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.adjacent(u, v) != b.adjacent(map[u], w))
                ok = false;
        if (!ok)
            continue;
        map[v] = w;
        used[w] = true;
        if (iso_extend(a, b, map, used, v + 1))
            return true;
        used[w] = false;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.m() != b.m())
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    std::vector<int> map(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    return iso_extend(a, b, map, used, 0);
}

} // namespace gemfive
