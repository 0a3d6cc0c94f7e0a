#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latkit/enumerate.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Criterion: w is extremal (minimal norm in w + 2L) iff every u with
// u^2 < w^2/2 has |u.w| <= u^2.
struct ExtremalityCertificate {
    ScaledVector w;
    Int verified_bound{0};                // all u with u^2 <= this bound were checked
    std::optional<ScaledVector> witness;  // a violating u, when not extremal

    bool valid() const { return !witness.has_value(); }
};

ExtremalityCertificate is_extremal(const LatticeHandle& L, const ScaledVector& w);

// |S_i^w| for 0 <= i <= max_i, where S_i^w = {u in L : u^2 = i = -u.w}.
std::map<Int, Int> s_census(const LatticeHandle& L, const ScaledVector& w, const Int& max_i);

struct EtaReport {
    ScaledVector w;
    Int m{0};  // = w^2
    std::map<Int, Int> s_counts;
    Int eta_value{0};
    Int min_set_size{0};  // |Min(w + 2L)|
};

// eta(L, w), the m = 0 invariant, for extremal w of even norm. Computed by
// the alternating S-census sum and always cross-checked against the direct
// signed sum over Min(w + 2L); a mismatch throws.
EtaReport eta(const LatticeHandle& L, const ScaledVector& w);

enum class EtaConvention {
    Paper,      // factor (a.w)^m, constant over the sum
    Corrected,  // per-summand factor (a.z)^m
};

// eta(L, w, a, m) under either convention; m must have the parity of w^2.
Int eta_general(const LatticeHandle& L, const ScaledVector& w, const ScaledVector& a, int m,
                EtaConvention convention);

struct FInvariantCertificate {
    int n = 2;
    ScaledVector w;
    Int m{0};           // eta exponent (0 throughout the paper's computations)
    Int value{0};       // w^2 - 1 for n = 2, (w^2 - m)/2 for n > 2
    Int residue{0};     // |Min/±| mod 2 for n = 2, eta mod n otherwise
    bool valid = false; // residue nonzero
};

// f_2 certificate: w extremal with |Min(w+2L)/±| odd certifies f_2 >= w^2 - 1.
FInvariantCertificate f2_certificate(const LatticeHandle& L, const ScaledVector& w);

// f_n certificate for n > 2 (m = 0 route): eta(L,w) != 0 mod n certifies
// f_n >= w^2 / 2.
FInvariantCertificate fn_certificate(const LatticeHandle& L, int n, const ScaledVector& w);

struct FnExhaustiveResult {
    int n = 2;
    std::optional<Int> value;  // best certified value under the cap
    std::vector<FInvariantCertificate> certificates;
    bool exhaustive = false;
    Int norm_cap{0};
};

// Exact f_n restricted to w^2 <= norm_cap. Full L/2L coset exhaustion when
// rank <= max_exhaustive_rank; a rootless even unimodular rank-24 lattice
// takes the congruence-class census route (class inventory certified by the
// a_4/2 + a_6/2 + a_8/48 + 1 = 2^24 identity, with sampled witnesses).
// Otherwise the result holds certificates for the supplied witnesses only and
// is flagged non-exhaustive.
FnExhaustiveResult fn_exhaustive(const LatticeHandle& L, int n, const Int& norm_cap,
                                 const std::vector<ScaledVector>& sample_witnesses = {},
                                 int max_exhaustive_rank = 16);

struct DeltaReport {
    ScaledVector char_rep;  // a characteristic vector
    Int min_char_norm{0};
    Int delta{0};  // (rank - min_char_norm) / 8
};

// Solves the mod-2 characteristic system on a basis and minimizes over the
// coset char_rep + 2L.
DeltaReport characteristic_coset(const LatticeHandle& L);

struct G4LowerBoundReport {
    std::optional<Int> f2, f4, f8;
    std::optional<Int> delta;
    Int bound{0};
    bool assumes_g4_at_most_128 = true;  // hypothesis of the combiner, recorded not verified
};

// max of: f2, 2 f4 - 1, 2 f8 - 2 (f8 even) or 2 f8 - 1 (f8 odd), 2 delta - 1.
G4LowerBoundReport g4_lower_bound(std::optional<Int> f2, std::optional<Int> f4,
                                  std::optional<Int> f8, std::optional<Int> delta);

}  // namespace latkit
