#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// A characteristic class (a | b_1, ..., b_n) in the odd Lorentzian lattice
// Z^{1,n}, with pairing (a|b) . (a'|b') = a a' - sum b_i b_i'.
struct LorentzClass {
    Int a;
    std::vector<Int> b;

    Int square() const;
    ScaledVector vector() const;  // coordinates (a, b_1, ..., b_n)
};

// Orthogonal complement of v in Z^{1,n}.  Requires v^2 = 1; the result is a
// rank-n unimodular lattice, negative definite inside the Lorentzian ambient.
LatticeHandle complement_lattice(const LorentzClass& v);

// Genus of a smooth degree-a curve representative: (sum b_i - 3a + 3) / 2.
Int adjunction_genus(const LorentzClass& v);

// Sufficient parity test for the complement to be even: a and all b_i odd.
bool even_complement_test(const LorentzClass& v);

// Root system of the norm-2 vectors of a positive definite lattice,
// decomposed into ADE components.
struct RootSystemFingerprint {
    // Sorted component labels, e.g. {'A',9},{'A',9}.
    std::vector<std::pair<char, int>> components;
    // Simple roots per component, parallel to `components`.
    std::vector<std::vector<ScaledVector>> component_simple_roots;
    Int root_count{0};
    bool spans_full_rank = false;

    std::string str() const;  // e.g. "A15+D9", "-" when empty
};

// Computes the fingerprint with a deterministic positivity functional.
RootSystemFingerprint root_fingerprint(const LatticeHandle& lattice);
// Same with a seeded random positivity functional; the component multiset
// must not depend on the seed.
RootSystemFingerprint root_fingerprint(const LatticeHandle& lattice,
                                       unsigned seed);

struct IdentifyResult {
    std::vector<std::string> candidates;  // singleton when identified
    RootSystemFingerprint fingerprint;
    std::string detail;

    bool identified() const { return candidates.size() == 1; }
    const std::string& name() const;
};

// Identifies a positive definite unimodular lattice from its root system,
// running the D8+D8 membership disambiguation when the fingerprint alone is
// inconclusive.
IdentifyResult identify_unimodular(const LatticeHandle& lattice);
// Table lookup by (rank, parity, component multiset) only.
IdentifyResult identify_by_fingerprint(
    int rank, bool even, const std::vector<std::pair<char, int>>& components);

// A plumbing tree: vertex weights on the diagonal, +1 off the diagonal for
// each edge.  The edge set must form a tree.
struct PlumbingGraph {
    std::vector<Int> weights;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(weights.size()); }
    IntMat gram() const;
};

// The abstract lattice presented by the plumbing Gram matrix.
LatticeHandle plumbing_lattice(const PlumbingGraph& graph);

// Flips signs of basis vectors (root fixed) so that every tree edge pairs to
// +1; returns nullopt if some edge pairs to a value other than +-1.
std::optional<std::vector<ScaledVector>> align_plumbing_signs(
    std::vector<ScaledVector> basis, const PlumbingGraph& graph,
    const AmbientForm& form);

// Checks that `basis` realises `graph` inside `lattice`: every vector is a
// lattice member, the Gram matrix matches the plumbing exactly, and the
// presented lattice is unimodular.  Throws latkit::error naming the offender
// on membership failure; returns false on a Gram or determinant mismatch.
bool verify_embedding(const LatticeHandle& lattice,
                      const std::vector<ScaledVector>& basis,
                      const PlumbingGraph& graph);

}  // namespace latkit
