#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gemfive/graph.hpp"

namespace gemfive {

// Deterministic, platform-independent RNG (splitmix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return int(next() % std::uint64_t(n)); } // n > 0
    bool flip() { return next() & 1; }
};

enum class BagKind { Clique, Cograph };

struct ExpansionSpec {
    int base = 1;                 // G_k id
    std::vector<int> sizes;       // one positive size per base vertex
    BagKind kind = BagKind::Clique;
    std::uint64_t seed = 0;       // cograph recipe seed
};

struct ExpansionResult {
    Graph graph;
    std::vector<Bitset> bags;     // bag per base vertex, consecutive ids
};

ExpansionResult expansion(const ExpansionSpec& spec);

// C5 blow-up with clique bags of size q: omega = 2q, Delta = 3q-1.
Graph tightness_family(int q);

struct HSpec {
    std::array<int, 5> a_sizes{1, 1, 1, 1, 1}; // A1..A5
    int a6_size = 1;
    std::vector<int> t_sizes{1};               // sizes of A7 components
    BagKind part_kind = BagKind::Clique;       // Clique => H*, Cograph => general H
    // a6_complete_to_t[i][j]: A6 vertex i complete to component j (else anticomplete)
    std::vector<std::vector<bool>> a6_complete_to_t;
    std::uint64_t seed = 0;
};

struct HInstance {
    Graph graph;
    std::array<Bitset, 7> parts; // A1..A7
};

HInstance make_h(const HSpec& spec);

// Random member of H* (clique A parts, A6 P4-free, A7 clique components),
// (P5,gem)-free by rejection sampling over the A6-A7 adjacency.
HInstance random_hstar(std::uint64_t seed, int budget);

// Same shape with cograph parts: a general member of class H.
HInstance random_h(std::uint64_t seed, int budget);

struct InstanceParams {
    int max_n = 40;
};

// Connected (P5,gem)-free instance: expansion of a random G_k, H*, or the
// tightness family, picked and sized deterministically from the seed.
Graph random_instance(std::uint64_t seed, const InstanceParams& params = {});

// Random cotree graph on n vertices (always P4-free).
Graph random_cograph(Rng& rng, int n);

} // namespace gemfive
