#pragma once

#include <optional>
#include <vector>

#include "latkit/numeric.hpp"
#include "latkit/vector.hpp"

namespace latkit {

// Row-style Hermite normal form. Rows of the result are an echelon basis for
// the row span of the input; pivots are positive, entries above a pivot lie
// in [0, pivot). Zero rows are dropped. Pivoting is deterministic (leftmost
// nonzero column, smallest absolute entry as working pivot).
IntMat hnf_rows(IntMat m);

struct HnfWithTransform {
    IntMat h;  // HNF rows, zero rows kept
    IntMat u;  // unimodular, u * input = h
};

// Same elimination but tracking the full unimodular row transform.
HnfWithTransform hnf_rows_transform(IntMat m);

// Basis (as rows) for the integer kernel {x : x * m = 0}.
IntMat integer_kernel(const IntMat& m);

// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Int determinant(const IntMat& m);

// Solve x * basis = v over the rationals where basis rows are echelon
// (as produced by hnf_rows). Returns nullopt if v is outside the row span.
std::optional<std::vector<Rat>> solve_echelon(const IntMat& basis, const std::vector<Int>& v);

// Solve m * x = rhs over GF(2); m symmetric square. Returns a 0/1 solution,
// nullopt if inconsistent.
std::optional<std::vector<int>> solve_mod2(const IntMat& m, const std::vector<Int>& rhs);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(int n);

}  // namespace latkit
