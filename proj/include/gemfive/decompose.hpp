#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "gemfive/detect.hpp"
#include "gemfive/graph.hpp"

namespace gemfive {

// Maximal C5 blow-up plus the classification of the outside vertices.
// Index arithmetic is modulo 5 throughout; A[i] is the paper's A_{i+1}.
struct BlowupPartition {
    std::array<Bitset, 5> A;
    std::array<Bitset, 5> Y;
    Bitset R;
};

struct ExpansionCert {
    int base = 0;               // G_k id
    std::vector<Bitset> bags;   // one per base vertex
};

struct HPartition {
    std::array<Bitset, 7> A;    // A1..A7
};

struct Decomposition {
    enum class Kind { Expansion, H } kind = Kind::Expansion;
    ExpansionCert expansion;
    HPartition h;
};

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grows A1..A5 from an induced C5 to a maximal blow-up (greedy fixpoint,
// ascending vertex ids). Only the A part is filled.
BlowupPartition grow_blowup(const Graph& g, const PatternHit& seed);

// Assigns every vertex outside A to some Y_i or to R; throws
// structural_error naming the vertex when neither fits.
void classify_outside(const Graph& g, BlowupPartition& bp);

// Theorem 3, constructively. Preconditions (connected, (P5,gem)-free,
// contains C5) are verified and violations reported with witnesses.
Decomposition decompose(const Graph& g);

struct ClaimCheck {
    std::string claim;
    bool pass;
    std::string detail;
};
struct ClaimReport {
    std::vector<ClaimCheck> checks;
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    std::string to_string() const;
};

// Re-checks every applicable assertion of Claims 2..9 on a blow-up partition.
ClaimReport verify_claims(const Graph& g, const BlowupPartition& bp);

bool validate_expansion_cert(const Graph& g, const ExpansionCert& cert, std::string* why = nullptr);
bool validate_h_partition(const Graph& g, const HPartition& hp, std::string* why = nullptr);
bool validate_decomposition(const Graph& g, const Decomposition& d, std::string* why = nullptr);

// {"kind":"expansion","base":k,"bags":[[...]]} or {"kind":"H","A":[[...]]},
// vertex ids 1-based to match the graph file format.
std::string decomposition_to_json(const Decomposition& d);

} // namespace gemfive
