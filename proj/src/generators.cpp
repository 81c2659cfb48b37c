#include "gemfive/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "gemfive/basic_graphs.hpp"
#include "gemfive/detect.hpp"

namespace gemfive {

namespace {

// union/join trees of bounded depth realize every cograph we need
void cograph_edges(Rng& rng, Graph& g, std::vector<int>& ids)
{
    int n = int(ids.size());
    if (n <= 1)
        return;
    int left = 1 + rng.below(n - 1);
    std::vector<int> a(ids.begin(), ids.begin() + left);
    std::vector<int> b(ids.begin() + left, ids.end());
    bool join = rng.flip();
    cograph_edges(rng, g, a);
    cograph_edges(rng, g, b);
    if (join)
        for (int u : a)
            for (int v : b)
                g.add_edge(u, v);
}

} // namespace

Graph random_cograph(Rng& rng, int n)
{
    Graph g(n);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    cograph_edges(rng, g, ids);
    return g;
}

ExpansionResult expansion(const ExpansionSpec& spec)
{
    const Graph& base = basic_graph(spec.base).graph;
    if (int(spec.sizes.size()) != base.n())
        throw std::invalid_argument("expansion: one size per base vertex required");
    int n = 0;
    for (int s : spec.sizes) {
        if (s < 1)
            throw std::invalid_argument("expansion: bag sizes must be positive");
        n += s;
    }
    ExpansionResult r;
    r.graph = Graph(n);
    r.bags.assign(base.n(), Bitset(n));
    Rng rng(spec.seed ^ 0x6b67656d66697665ULL);
    int at = 0;
    std::vector<int> start(base.n());
    for (int b = 0; b < base.n(); ++b) {
        start[b] = at;
        for (int i = 0; i < spec.sizes[b]; ++i, ++at) {
            r.bags[b].set(at);
            r.graph.set_label(at, "Q" + std::to_string(b + 1) + "#" + std::to_string(i));
        }
        // inside the bag
        if (spec.kind == BagKind::Clique) {
            for (int i = start[b]; i < at; ++i)
                for (int j = i + 1; j < at; ++j)
                    r.graph.add_edge(i, j);
        } else {
            std::vector<int> ids(spec.sizes[b]);
            std::iota(ids.begin(), ids.end(), start[b]);
            cograph_edges(rng, r.graph, ids);
        }
    }
    for (int a = 0; a < base.n(); ++a)
        for (int b = a + 1; b < base.n(); ++b)
            if (base.adjacent(a, b))
                for (int u : iterate(r.bags[a]))
                    for (int v : iterate(r.bags[b]))
                        r.graph.add_edge(u, v);
    return r;
}

Graph tightness_family(int q)
{
    if (q < 1)
        throw std::invalid_argument("tightness_family: q must be >= 1");
    ExpansionSpec spec;
    spec.base = 1;
    spec.sizes.assign(5, q);
    return expansion(spec).graph;
}

HInstance make_h(const HSpec& spec)
{
    int k = int(spec.t_sizes.size());
    int n = spec.a6_size;
    for (int s : spec.a_sizes)
        n += s;
    for (int s : spec.t_sizes)
        n += s;
    if (spec.a6_size < 1 || k < 1)
        throw std::invalid_argument("make_h: all seven parts must be non-empty");
    for (int s : spec.a_sizes)
        if (s < 1)
            throw std::invalid_argument("make_h: all seven parts must be non-empty");

    HInstance inst;
    inst.graph = Graph(n);
    for (auto& p : inst.parts)
        p = Bitset(n);
    Rng rng(spec.seed ^ 0x68737461724b4579ULL);

    auto fill_part = [&](Bitset& part, int size, int& at, const std::string& name) {
        std::vector<int> ids;
        for (int i = 0; i < size; ++i, ++at) {
            part.set(at);
            ids.push_back(at);
            inst.graph.set_label(at, name + "#" + std::to_string(i));
        }
        if (spec.part_kind == BagKind::Clique) {
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = i + 1; j < ids.size(); ++j)
                    inst.graph.add_edge(ids[i], ids[j]);
        } else {
            cograph_edges(rng, inst.graph, ids);
        }
        return ids;
    };

    int at = 0;
    for (int i = 0; i < 5; ++i)
        fill_part(inst.parts[i], spec.a_sizes[i], at, "A" + std::to_string(i + 1));
    // A6 is P4-free in class H whether or not the rest are cliques
    {
        std::vector<int> ids;
        for (int i = 0; i < spec.a6_size; ++i, ++at) {
            inst.parts[5].set(at);
            ids.push_back(at);
            inst.graph.set_label(at, "A6#" + std::to_string(i));
        }
        cograph_edges(rng, inst.graph, ids);
    }
    std::vector<Bitset> comps;
    for (int j = 0; j < k; ++j) {
        Bitset comp(n);
        int base_at = at;
        fill_part(comp, spec.t_sizes[j], at, "T" + std::to_string(j + 1));
        (void)base_at;
        inst.parts[6] |= comp;
        comps.push_back(comp);
    }

    auto join = [&](const Bitset& x, const Bitset& y) {
        for (int u : iterate(x))
            for (int v : iterate(y))
                inst.graph.add_edge(u, v);
    };
    const auto& A = inst.parts;
    join(A[0], A[1]); // the class-H completeness bullets
    join(A[0], A[4]);
    join(A[0], A[5]);
    join(A[2], A[1]);
    join(A[2], A[3]);
    join(A[2], A[5]);
    join(A[3], A[4]);
    join(A[3], A[5]);
    // A6-A7: per (A6 vertex, component) completeness flags
    std::vector<int> a6 = A[5].to_vector();
    for (int i = 0; i < int(a6.size()); ++i)
        for (int j = 0; j < k; ++j) {
            bool on = i < int(spec.a6_complete_to_t.size())
                    && j < int(spec.a6_complete_to_t[i].size()) && spec.a6_complete_to_t[i][j];
            if (on)
                for (int t : iterate(comps[j]))
                    inst.graph.add_edge(a6[i], t);
        }
    return inst;
}

namespace {

HInstance random_h_impl(std::uint64_t seed, int budget, BagKind kind)
{
    if (budget < 7)
        throw std::invalid_argument("random_h: budget must allow seven non-empty parts");
    Rng rng(seed);
    HSpec spec;
    spec.seed = seed;
    spec.part_kind = kind;
    int spare = budget - 7;
    auto take = [&](int cap) {
        int t = spare > 0 ? rng.below(std::min(spare, cap) + 1) : 0;
        spare -= t;
        return 1 + t;
    };
    for (int i = 0; i < 5; ++i)
        spec.a_sizes[i] = take(3);
    spec.a6_size = take(3);
    int comps = 1 + (spare > 0 ? rng.below(std::min(spare, 2) + 1) : 0);
    spare -= comps - 1;
    spec.t_sizes.assign(comps, 1);
    for (int j = 0; j < comps; ++j) {
        int extra = spare > 0 ? rng.below(std::min(spare, 3) + 1) : 0;
        spec.t_sizes[j] += extra;
        spare -= extra;
    }

    auto sample = [&](bool everything_on) {
        spec.a6_complete_to_t.assign(spec.a6_size, std::vector<bool>(comps, false));
        for (int i = 0; i < spec.a6_size; ++i)
            for (int j = 0; j < comps; ++j)
                spec.a6_complete_to_t[i][j] = everything_on || rng.flip();
        for (int j = 0; j < comps; ++j) { // keep every component attached
            bool any = false;
            for (int i = 0; i < spec.a6_size; ++i)
                any = any || spec.a6_complete_to_t[i][j];
            if (!any)
                spec.a6_complete_to_t[0][j] = true;
        }
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        sample(false);
        HInstance inst = make_h(spec);
        if (is_p5_gem_free(inst.graph).free)
            return inst;
    }
    // deterministic fallback: join every component completely to A6
    sample(true);
    HInstance inst = make_h(spec);
    if (!is_p5_gem_free(inst.graph).free)
        throw std::runtime_error("random_h: fallback instance not (P5,gem)-free");
    return inst;
}

} // namespace

HInstance random_hstar(std::uint64_t seed, int budget)
{
    return random_h_impl(seed, budget, BagKind::Clique);
}

HInstance random_h(std::uint64_t seed, int budget)
{
    return random_h_impl(seed, budget, BagKind::Cograph);
}

Graph random_instance(std::uint64_t seed, const InstanceParams& params)
{
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    int max_n = std::max(params.max_n, 10);
    switch (rng.below(4)) {
    case 0: { // tightness family
        int q = 1 + rng.below(std::max(1, max_n / 5));
        return tightness_family(q);
    }
    case 1: { // H*
        int budget = 7 + rng.below(max_n - 7 + 1);
        return random_hstar(rng.next(), budget).graph;
    }
    default: { // expansion of a random base graph, clique or cograph bags
        ExpansionSpec spec;
        spec.base = 1 + rng.below(10);
        spec.seed = rng.next();
        spec.kind = rng.flip() ? BagKind::Clique : BagKind::Cograph;
        int nb = basic_graph(spec.base).graph.n();
        spec.sizes.assign(nb, 1);
        int spare = max_n - nb;
        for (int i = 0; i < nb && spare > 0; ++i) {
            int extra = rng.below(std::min(spare, 3) + 1);
            spec.sizes[i] += extra;
            spare -= extra;
        }
        return expansion(spec).graph;
    }
    }
}

} // namespace gemfive
