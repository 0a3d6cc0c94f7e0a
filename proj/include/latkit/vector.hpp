#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latkit/numeric.hpp"

namespace latkit {

using IntMat = std::vector<std::vector<Int>>;

// Ambient bilinear form. Euclidean(n) is the standard dot product on Q^n;
// Lorentzian(1,n) pairs (a|b1..bn) with (a'|b'1..b'n) as aa' - sum b_i b'_i;
// Quadratic carries an explicit symmetric integer Gram matrix, used for
// lattices presented abstractly by a Gram matrix (coordinates are basis
// coefficients).
struct AmbientForm {
    enum class Kind { Euclidean, Lorentzian, Quadratic };

    Kind kind = Kind::Euclidean;
    int dim = 0;
    std::shared_ptr<const IntMat> gram;  // Kind::Quadratic only

    static AmbientForm euclidean(int n) { return {Kind::Euclidean, n, nullptr}; }
    // Signature (+, -^n); dimension is 1 + n.
    static AmbientForm lorentzian(int n) { return {Kind::Lorentzian, n + 1, nullptr}; }
    static AmbientForm quadratic(IntMat g);

    bool operator==(const AmbientForm& o) const;
};

// Exact lattice element: integer coordinates over one shared denominator.
struct ScaledVector {
    std::vector<Int> coords;
    Int denom{1};

    ScaledVector() = default;
    ScaledVector(std::vector<Int> c, Int d);
    static ScaledVector zero(int dim);
    static ScaledVector integral(std::vector<Int> c) { return ScaledVector(std::move(c), 1); }

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    // Divides out gcd(coords, denom); idempotent.
    ScaledVector canonicalized() const;

    ScaledVector operator-() const;
    ScaledVector operator+(const ScaledVector& o) const;
    ScaledVector operator-(const ScaledVector& o) const;
    ScaledVector scaled(const Int& k) const;
    ScaledVector scaled(const Rat& k) const;

    bool operator==(const ScaledVector& o) const;  // compares values, not representations
    bool operator<(const ScaledVector& o) const;   // canonical order for deterministic output

    std::string str() const;
};

// Exact pairing in the ambient form.
Rat pairing_rat(const ScaledVector& u, const ScaledVector& v, const AmbientForm& form);

// Pairing asserted to be an integer (the case for members of an integral lattice).
Int pairing(const ScaledVector& u, const ScaledVector& v, const AmbientForm& form);

inline Int norm(const ScaledVector& v, const AmbientForm& form) { return pairing(v, v, form); }

}  // namespace latkit
