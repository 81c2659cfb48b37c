#include "gemfive/oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace gemfive {

int exact_limit()
{
    if (const char* s = std::getenv("GEMFIVE_EXACT_LIMIT")) {
        int v = std::atoi(s);
        if (v > 0)
            return v;
    }
    return 20;
}

namespace {

// Bron-Kerbosch with pivoting. `collect` decides whether all maximum
// cliques are gathered or just one.
struct BronKerbosch {
    const Graph& g;
    bool collect_all;
    int best = -1;
    std::vector<Bitset> out;

    explicit BronKerbosch(const Graph& g, bool all) : g(g), collect_all(all) {}

    void run()
    {
        Bitset r(g.n()), p = g.full_set(), x(g.n());
        expand(r, p, x);
    }

    void expand(Bitset& r, Bitset p, Bitset x)
    {
        if (p.empty() && x.empty()) {
            report(r);
            return;
        }
        // pivot: vertex of P|X with most neighbors in P
        int pivot = -1, bestdeg = -1;
        for (int v : iterate(p | x)) {
            int d = (g.neighbors(v) & p).count();
            if (d > bestdeg) {
                bestdeg = d;
                pivot = v;
            }
        }
        Bitset ext = p;
        if (pivot >= 0)
            ext -= g.neighbors(pivot);
        for (int v : iterate(ext)) {
            r.set(v);
            expand(r, p & g.neighbors(v), x & g.neighbors(v));
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    void report(const Bitset& clique)
    {
        int sz = clique.count();
        if (sz > best) {
            best = sz;
            out.clear();
        }
        if (sz == best && (collect_all || out.empty()))
            out.push_back(clique);
    }
};

} // namespace

Bitset max_clique(const Graph& g)
{
    if (g.n() == 0)
        return Bitset(0);
    BronKerbosch bk(g, false);
    bk.run();
    // deterministic choice: lexicographically least among ties
    Bitset best = bk.out.front();
    return best;
}

int clique_number(const Graph& g) { return max_clique(g).count(); }

std::vector<Bitset> all_maximum_cliques(const Graph& g)
{
    if (g.n() == 0)
        return {};
    BronKerbosch bk(g, true);
    bk.run();
    return bk.out;
}

namespace {

// DSATUR greedy; returns a proper coloring (upper bound for chi).
Coloring dsatur_greedy(const Graph& g)
{
    int n = g.n();
    Coloring c;
    c.color.assign(n, -1);
    std::vector<Bitset> nbcolors(n); // colors seen in each vertex's neighborhood
    for (int v = 0; v < n; ++v)
        nbcolors[v] = Bitset(n + 1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.color[v] >= 0)
                continue;
            int s = nbcolors[v].count();
            int d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        int col = 0;
        while (nbcolors[pick].test(col))
            ++col;
        c.color[pick] = col;
        c.colors = std::max(c.colors, col + 1);
        for (int u : iterate(g.neighbors(pick)))
            nbcolors[u].set(col);
    }
    return c;
}

struct ChiSolver {
    const Graph& g;
    int n;
    int lb;
    Coloring best;         // best complete coloring found
    std::vector<int> cur;  // partial assignment
    std::vector<Bitset> nbcolors;

    explicit ChiSolver(const Graph& g) : g(g), n(g.n())
    {
        lb = clique_number(g);
        best = dsatur_greedy(g);
        cur.assign(n, -1);
        nbcolors.assign(n, Bitset(n + 1));
    }

    void solve()
    {
        if (best.colors == lb)
            return;
        dive(0, 0);
    }

    void dive(int colored, int used)
    {
        if (used >= best.colors)
            return;
        if (colored == n) {
            best.color = cur;
            best.colors = used;
            return;
        }
        // next vertex: max saturation, then max degree, then least id
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (cur[v] >= 0)
                continue;
            int s = nbcolors[v].count();
            int d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        int maxcol = std::min(used, best.colors - 1); // color `used` opens a new class
        for (int col = 0; col <= maxcol; ++col) {
            if (nbcolors[pick].test(col))
                continue;
            cur[pick] = col;
            std::vector<int> touched;
            for (int u : iterate(g.neighbors(pick)))
                if (cur[u] < 0 && !nbcolors[u].test(col)) {
                    nbcolors[u].set(col);
                    touched.push_back(u);
                }
            dive(colored + 1, std::max(used, col + 1));
            for (int u : touched)
                nbcolors[u].reset(col);
            cur[pick] = -1;
            if (best.colors == lb)
                return;
        }
    }
};

} // namespace

Coloring exact_color(const Graph& g)
{
    if (g.n() == 0)
        return Coloring{{}, 0};
    ChiSolver s(g);
    s.solve();
    return s.best;
}

int chi_exact(const Graph& g, int limit)
{
    if (g.n() > limit)
        throw exact_limit_error("chi_exact: n=" + std::to_string(g.n()) + " exceeds limit "
            + std::to_string(limit));
    return exact_color(g).colors;
}

int chi_exact(const Graph& g) { return chi_exact(g, exact_limit()); }

bool verify_coloring(const Graph& g, const Coloring& c)
{
    if (int(c.color.size()) != g.n())
        return false;
    std::vector<bool> seen(c.colors, false);
    for (int v = 0; v < g.n(); ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.colors)
            return false;
        seen[c.color[v]] = true;
        for (int u : iterate(g.neighbors(v)))
            if (c.color[u] == c.color[v])
                return false;
    }
    for (bool b : seen)
        if (!b)
            return false;
    return true;
}

bool is_good_stable_set(const Graph& g, const Bitset& s)
{
    if (!g.is_stable(s))
        return false;
    for (const Bitset& q : all_maximum_cliques(g))
        if (!q.intersects(s))
            return false;
    return true;
}

bool reed_check(const Graph& g)
{
    int chi = chi_exact(g);
    return chi <= reed_bound(g.max_degree(), clique_number(g));
}

OracleReport oracle_report(const Graph& g)
{
    OracleReport r;
    r.omega = clique_number(g);
    r.delta = g.max_degree();
    r.bound54 = bound54(r.omega);
    r.reed = reed_bound(r.delta, r.omega);
    if (g.n() <= exact_limit())
        r.chi = chi_exact(g);
    return r;
}

} // namespace gemfive
