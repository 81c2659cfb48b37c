#include "gemfive/basic_graphs.hpp"

#include <sstream>
#include <stdexcept>

#include "gemfive/detect.hpp"

namespace gemfive {

namespace {

Graph make(int n, const std::vector<std::pair<int, int>>& edges1)
{
    Graph g(n);
    for (auto [u, v] : edges1)
        g.add_edge(u - 1, v - 1);
    for (int v = 0; v < n; ++v)
        g.set_label(v, "x" + std::to_string(v + 1));
    return g;
}

std::vector<int> zb(std::vector<int> xs)
{
    for (int& x : xs)
        --x;
    return xs;
}

BasicGraphSpec build(int k)
{
    BasicGraphSpec s;
    s.id = k;
    auto stable = [&](std::vector<int> xs) { s.stable_sets.push_back(zb(std::move(xs))); };
    auto clique = [&](std::vector<int> xs) { s.cliques.push_back(zb(std::move(xs))); };
    auto nbhd = [&](int v, std::vector<int> xs) {
        s.exact_neighborhoods.emplace_back(v - 1, zb(std::move(xs)));
    };
    switch (k) {
    case 1:
        s.graph = make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
        break;
    case 2:
        // C5 plus a vertex complete to x1, x3, x4
        s.graph = make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {3, 6}, {4, 6}});
        stable({2, 5, 6});
        nbhd(6, {1, 3, 4});
        break;
    case 3:
        s.graph = make(7,
            {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {4, 7}});
        nbhd(5, {1, 4});
        nbhd(7, {2, 4});
        clique({1, 5});
        clique({4, 5});
        clique({1, 2});
        clique({4, 7});
        clique({2, 7});
        clique({1, 6});
        clique({2, 3});
        clique({3, 4, 6});
        stable({2, 4});
        stable({1, 3, 7});
        stable({3, 5, 7});
        stable({2, 5, 6});
        stable({1, 4});
        stable({5, 6, 7});
        stable({2, 5});
        break;
    case 4:
        s.graph = make(7,
            {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {3, 6}, {4, 5}, {4, 6},
                {4, 7}});
        nbhd(5, {1, 4});
        clique({1, 7});
        clique({4, 7});
        clique({1, 6});
        clique({4, 6});
        clique({4, 5});
        clique({1, 5});
        stable({2, 5, 6});
        break;
    case 5:
        s.graph = make(8,
            {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {3, 6}, {3, 8},
                {4, 5}, {4, 6}, {4, 7}});
        nbhd(5, {1, 4});
        clique({1, 7});
        clique({4, 7});
        clique({1, 6});
        clique({4, 6});
        clique({4, 5});
        clique({1, 5});
        stable({2, 5, 6, 8});
        break;
    case 6:
        s.graph = make(8,
            {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 7}, {2, 8}, {3, 4}, {3, 6}, {4, 5},
                {4, 6}, {4, 7}, {5, 8}, {6, 8}});
        nbhd(8, {2, 5, 6});
        nbhd(5, {1, 4, 8});
        clique({1, 2});
        clique({1, 5});
        clique({1, 6});
        clique({6, 8});
        clique({5, 8});
        clique({2, 3});
        clique({2, 8});
        clique({4, 5});
        clique({4, 7});
        clique({3, 4, 6});
        clique({1, 2, 7});
        stable({1, 4, 8});
        stable({3, 5, 7});
        stable({2, 4});
        stable({3, 7, 8});
        stable({2, 5, 6});
        break;
    case 7:
        s.graph = make(8,
            {{1, 2}, {1, 3}, {1, 4}, {1, 7}, {2, 3}, {2, 5}, {2, 8}, {3, 6}, {4, 5}, {4, 6},
                {4, 8}, {5, 6}, {5, 7}});
        nbhd(7, {1, 5});
        nbhd(8, {2, 4});
        clique({1, 2, 3});
        clique({4, 5, 6});
        clique({3, 6});
        clique({1, 7});
        clique({5, 7});
        clique({2, 8});
        clique({4, 8});
        clique({1, 4});
        clique({2, 5});
        stable({6, 7, 8});
        stable({3, 7, 8});
        stable({1, 5, 8});
        stable({3, 5, 8});
        stable({3, 4, 7});
        stable({1, 6, 8});
        stable({2, 6, 7});
        stable({7, 8});
        break;
    case 8:
        s.graph = make(8,
            {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 8}, {3, 4}, {3, 7}, {4, 5}, {4, 6},
                {4, 8}, {5, 7}, {6, 8}, {7, 8}});
        nbhd(2, {1, 3, 8});
        nbhd(3, {2, 4, 7});
        clique({7, 8});
        clique({3, 7});
        clique({2, 8});
        clique({4, 5});
        clique({1, 6});
        clique({1, 2});
        clique({3, 4});
        clique({2, 3});
        clique({1, 5, 7});
        clique({4, 6, 8});
        stable({1, 3, 8});
        stable({2, 4, 7});
        stable({3, 5, 6});
        stable({2, 5, 6});
        stable({1, 4});
        break;
    case 9:
        s.graph = make(9,
            {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {1, 9}, {2, 3}, {2, 8}, {3, 4}, {3, 7}, {4, 5},
                {4, 6}, {4, 8}, {4, 9}, {5, 7}, {6, 8}, {7, 8}});
        nbhd(2, {1, 3, 8});
        nbhd(3, {2, 4, 7});
        nbhd(9, {1, 4});
        clique({1, 9});
        clique({4, 9});
        clique({1, 2});
        clique({2, 3});
        clique({3, 4});
        clique({1, 5, 7});
        clique({4, 6, 8});
        clique({2, 8});
        clique({3, 7});
        clique({7, 8});
        stable({2, 4, 7});
        stable({1, 3, 8});
        stable({3, 5, 6, 9});
        stable({2, 5, 6, 9});
        stable({1, 4});
        break;
    case 10: {
        // nine vertices u1..u9, edges u_i u_{i+1} and u_i u_{i+3}, i mod 9
        Graph g(9);
        for (int i = 0; i < 9; ++i) {
            g.add_edge(i, (i + 1) % 9);
            g.add_edge(i, (i + 3) % 9);
            g.set_label(i, "u" + std::to_string(i + 1));
        }
        s.graph = g;
        for (int i = 0; i < 9; ++i) {
            s.cliques.push_back({i, (i + 3) % 9, (i + 6) % 9});
            s.stable_sets.push_back({(i + 4) % 9, (i + 6) % 9, (i + 8) % 9});
        }
        break;
    }
    default:
        throw std::out_of_range("basic_graph: k must be in 1..10");
    }
    return s;
}

} // namespace

const BasicGraphSpec& basic_graph(int k)
{
    if (k < 1 || k > 10)
        throw std::out_of_range("basic_graph: k must be in 1..10");
    static const std::vector<BasicGraphSpec> all = [] {
        std::vector<BasicGraphSpec> v;
        for (int i = 1; i <= 10; ++i)
            v.push_back(build(i));
        return v;
    }();
    return all[k - 1];
}

void validate_spec_into(const BasicGraphSpec& spec, ValidationReport& report)
{
    const Graph& g = spec.graph;
    auto fail = [&](const std::string& what) { report.issues.push_back({spec.id, what}); };

    FreeCheck fc = is_p5_gem_free(g);
    if (!fc.free)
        fail(std::string("contains induced ") + pattern_name(fc.witness->pattern));
    if (!find_induced(g, Pattern::C5))
        fail("contains no induced C5");

    auto show = [](const std::vector<int>& xs) {
        std::string s = "{";
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? ",x" : "x") + std::to_string(xs[i] + 1);
        return s + "}";
    };
    for (const auto& st : spec.stable_sets) {
        Bitset b(g.n());
        for (int v : st)
            b.set(v);
        if (!g.is_stable(b))
            fail("set " + show(st) + " is not stable");
    }
    for (const auto& cl : spec.cliques) {
        Bitset b(g.n());
        for (int v : cl)
            b.set(v);
        if (!g.is_clique(b))
            fail("set " + show(cl) + " is not a clique");
    }
    for (const auto& [v, nb] : spec.exact_neighborhoods) {
        Bitset b(g.n());
        for (int u : nb)
            b.set(u);
        if (!(g.neighbors(v) == b))
            fail("N(x" + std::to_string(v + 1) + ") != " + show(nb));
    }
    if (spec.id == 10) {
        // the explicit edge rule
        bool ok = g.n() == 9 && g.m() == 18;
        for (int i = 0; ok && i < 9; ++i)
            for (int j = i + 1; ok && j < 9; ++j) {
                int d = (j - i) % 9;
                bool want = d == 1 || d == 3 || d == 6 || d == 8;
                if (g.adjacent(i, j) != want)
                    ok = false;
            }
        if (!ok)
            fail("edge rule u_i u_{i+1}, u_i u_{i+3} violated");
    }
}

ValidationReport validate_basic_graphs()
{
    ValidationReport report;
    for (int k = 1; k <= 10; ++k)
        validate_spec_into(basic_graph(k), report);
    return report;
}

std::string ValidationReport::to_string() const
{
    std::ostringstream out;
    for (int k = 1; k <= 10; ++k) {
        int bad = 0;
        for (const auto& i : issues)
            if (i.k == k)
                ++bad;
        out << "G" << k << ": " << (bad ? "FAIL" : "ok");
        for (const auto& i : issues)
            if (i.k == k)
                out << "\n  - " << i.what;
        out << "\n";
    }
    return out.str();
}

} // namespace gemfive
