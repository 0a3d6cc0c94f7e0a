#pragma once

#include <optional>
#include <vector>

#include "latkit/intmat.hpp"
#include "latkit/numeric.hpp"
#include "latkit/vector.hpp"

namespace latkit {

// A lattice presented by a generating set in an ambient form (or, through
// from_gram, abstractly by a symmetric integer Gram matrix). The echelon
// basis, Gram matrix, determinant and related flags are computed once at
// construction; instances are immutable afterwards.
class LatticeHandle {
public:
    static LatticeHandle from_generators(AmbientForm form, std::vector<ScaledVector> generators);
    static LatticeHandle from_gram(IntMat gram);

    const AmbientForm& ambient() const { return form_; }
    int ambient_dim() const { return form_.dim; }
    int rank() const { return static_cast<int>(basis_.size()); }

    // HNF basis; deterministic for a fixed generator order.
    const std::vector<ScaledVector>& basis() const { return basis_; }

    // Gram matrix of the basis in the ambient form (integer entries asserted).
    const IntMat& gram() const { return gram_; }

    // Gram of the positive definite form: negated when orientation is -1.
    // Throws for indefinite lattices.
    IntMat positive_gram() const;

    Int det_abs() const { return det_abs_; }
    bool is_unimodular() const { return det_abs_ == 1; }
    bool is_even() const { return even_; }

    // +1 positive definite, -1 negative definite, 0 indefinite or rank 0... rank 0 is +1.
    int orientation() const { return orientation_; }

    bool contains(const ScaledVector& v) const;

    // Integer coefficients of v in the basis; nullopt if v is not a member.
    std::optional<std::vector<Int>> integer_coords(const ScaledVector& v) const;

    // Rational coefficients of v in the basis; nullopt if v is outside the
    // rational span.
    std::optional<std::vector<Rat>> rational_coords(const ScaledVector& v) const;

    ScaledVector vector_from_coords(const std::vector<Int>& coeffs) const;
    ScaledVector vector_from_coords(const std::vector<Rat>& coeffs) const;

    // The lattice k*L inside the same ambient.
    LatticeHandle scaled(const Int& k) const;

private:
    AmbientForm form_;
    std::vector<ScaledVector> basis_;
    IntMat basis_int_;  // basis coords scaled to the common denominator
    Int basis_denom_{1};
    IntMat gram_;
    Int det_abs_{1};
    bool even_ = true;
    int orientation_ = 1;
};

}  // namespace latkit
