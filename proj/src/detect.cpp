#include "gemfive/detect.hpp"

#include <array>

namespace gemfive {

const char* pattern_name(Pattern p)
{
    switch (p) {
    case Pattern::P4:
        return "P4";
    case Pattern::P5:
        return "P5";
    case Pattern::Gem:
        return "gem";
    case Pattern::C5:
        return "C5";
    }
    return "?";
}

namespace {

struct PatternShape {
    int k;
    // adjacency matrix of the pattern over tuple positions
    bool adj[5][5];
};

PatternShape shape_of(Pattern p)
{
    PatternShape s{};
    auto e = [&](int a, int b) { s.adj[a][b] = s.adj[b][a] = true; };
    switch (p) {
    case Pattern::P4:
        s.k = 4;
        e(0, 1);
        e(1, 2);
        e(2, 3);
        break;
    case Pattern::P5:
        s.k = 5;
        e(0, 1);
        e(1, 2);
        e(2, 3);
        e(3, 4);
        break;
    case Pattern::C5:
        s.k = 5;
        e(0, 1);
        e(1, 2);
        e(2, 3);
        e(3, 4);
        e(4, 0);
        break;
    case Pattern::Gem:
        s.k = 5;
        e(0, 1);
        e(1, 2);
        e(2, 3);
        e(4, 0);
        e(4, 1);
        e(4, 2);
        e(4, 3);
        break;
    }
    return s;
}

bool search(const Graph& g, const PatternShape& s, int pos, std::vector<int>& tuple, Bitset& used,
    const Bitset& full)
{
    if (pos == s.k)
        return true;
    Bitset cand = full;
    cand -= used;
    for (int j = 0; j < pos; ++j) {
        if (s.adj[j][pos])
            cand &= g.neighbors(tuple[j]);
        else
            cand -= g.neighbors(tuple[j]);
    }
    for (int v : iterate(cand)) {
        tuple[pos] = v;
        used.set(v);
        if (search(g, s, pos + 1, tuple, used, full))
            return true;
        used.reset(v);
    }
    return false;
}

} // namespace

bool induces_pattern(const Graph& g, Pattern p, const std::vector<int>& tuple)
{
    PatternShape s = shape_of(p);
    if (int(tuple.size()) != s.k)
        return false;
    for (int i = 0; i < s.k; ++i)
        for (int j = i + 1; j < s.k; ++j) {
            if (tuple[i] == tuple[j])
                return false;
            if (g.adjacent(tuple[i], tuple[j]) != s.adj[i][j])
                return false;
        }
    return true;
}

std::optional<PatternHit> find_induced(const Graph& g, Pattern p)
{
    PatternShape s = shape_of(p);
    if (g.n() < s.k)
        return std::nullopt;
    std::vector<int> tuple(s.k);
    Bitset used(g.n());
    Bitset full = g.full_set();
    if (search(g, s, 0, tuple, used, full))
        return PatternHit{p, tuple};
    return std::nullopt;
}

FreeCheck is_p5_gem_free(const Graph& g)
{
    if (auto hit = find_induced(g, Pattern::P5))
        return {false, hit};
    if (auto hit = find_induced(g, Pattern::Gem))
        return {false, hit};
    return {true, std::nullopt};
}

bool is_p4_free(const Graph& g) { return !find_induced(g, Pattern::P4).has_value(); }

bool is_homogeneous(const Graph& g, const Bitset& x)
{
    for (int v = 0; v < g.n(); ++v) {
        if (x.test(v))
            continue;
        const Bitset& nb = g.neighbors(v);
        if (nb.intersects(x) && !x.is_subset_of(nb))
            return false;
    }
    return true;
}

std::vector<Bitset> components_of(const Graph& g, const Bitset& s)
{
    std::vector<Bitset> comps;
    Bitset seen(g.n());
    for (int v0 : iterate(s)) {
        if (seen.test(v0))
            continue;
        Bitset comp(g.n());
        std::vector<int> stack = {v0};
        comp.set(v0);
        seen.set(v0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : iterate(g.neighbors(v) & s))
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

} // namespace gemfive
