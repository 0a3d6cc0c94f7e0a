#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Exact LDL^T of a positive definite integer Gram matrix:
// gram = lower * diag * lower^T with unit lower triangle.
struct LdlData {
    int n = 0;
    std::vector<std::vector<Rat>> lower;
    std::vector<Rat> diag;  // all positive
};

LdlData ldl_decompose(const IntMat& gram);

// Exact LLL (delta = 3/4) on a positive definite Gram matrix. transform is
// unimodular with reduced = transform * B_old in basis terms, i.e.
// reduced_gram = transform * gram * transform^T.
struct GramReduction {
    IntMat reduced_gram;
    IntMat transform;
};

GramReduction lll_reduce_gram(IntMat gram);

enum class EnumMode { CountOnly, Collect, Visit };

struct ShortVectorQuery {
    const LatticeHandle* lattice = nullptr;  // definite; enumeration uses the positive form
    Int norm_bound{0};
    EnumMode mode = EnumMode::Collect;
    bool modulo_negation = false;
    // Visit mode: called with the vector in ambient coordinates and its norm.
    std::function<void(const ScaledVector&, const Int&)> visit;
    // Visit mode, cheaper alternative: called with the coordinates of the
    // vector in the lattice basis and its norm.  When set it takes precedence
    // over `visit`, and no ambient vector is constructed.
    std::function<void(const std::vector<Int>&, const Int&)> visit_coords;
    std::int64_t memory_cap = std::int64_t(1) << 27;  // collect-mode vector cap
};

struct ShortVectorResult {
    std::map<Int, std::int64_t> counts;  // norm -> count, norms 1..bound that occur
    std::vector<ScaledVector> vectors;   // collect mode, canonically sorted
    std::int64_t total = 0;
};

// Census of {v in L : 0 < v^2 <= bound}. With modulo_negation, exactly one of
// each pair {v,-v} is reported.
ShortVectorResult short_vectors(const ShortVectorQuery& query);

// Min(t + lattice): all minimal-norm vectors of the coset, with the common norm.
struct CosetMinSet {
    ScaledVector target;
    Int min_norm{0};
    std::vector<ScaledVector> vectors;  // sorted; contains 0 iff t is a member
};

CosetMinSet coset_minima(const ScaledVector& t, const LatticeHandle& sublattice);

// Exact theta coefficients a_i for 0 <= i <= up_to (a_0 = 1).
std::map<Int, Int> theta_coefficients(const LatticeHandle& lattice, const Int& up_to);

// Optional on-disk census cache, keyed by (gram hash, bound). Records carry a
// content hash; corrupt entries are discarded and recomputed.
class CensusCache {
public:
    explicit CensusCache(std::string directory) : dir_(std::move(directory)) {}

    std::optional<std::map<Int, Int>> load(const IntMat& gram, const Int& bound) const;
    void store(const IntMat& gram, const Int& bound, const std::map<Int, Int>& counts) const;

private:
    std::string dir_;
    std::string key_path(const IntMat& gram, const Int& bound) const;
};

// theta_coefficients with read-through caching.
std::map<Int, Int> theta_coefficients_cached(const LatticeHandle& lattice, const Int& up_to,
                                             const CensusCache* cache);

}  // namespace latkit
