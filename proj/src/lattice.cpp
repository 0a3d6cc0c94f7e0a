#include "latkit/lattice.hpp"

#include <algorithm>

namespace latkit {

namespace {

// Signs of the diagonal in a rational symmetric elimination; detects
// definiteness without assuming it.
int definiteness(const IntMat& g) {
    const int n = static_cast<int>(g.size());
    if (n == 0) return 1;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g[i][j];
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) return 0;  // semidefinite or indefinite; either way not definite
        (a[k][k] > 0 ? pos : neg)++;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    if (pos == n) return 1;
    if (neg == n) return -1;
    return 0;
}

}  // namespace

LatticeHandle LatticeHandle::from_generators(AmbientForm form, std::vector<ScaledVector> generators) {
    LatticeHandle L;
    L.form_ = std::move(form);
    Int d = 1;
    for (const auto& g : generators) {
        if (g.dim() != L.form_.dim) throw error("lattice generator dimension mismatch");
        d = lcm(d, g.denom);
    }
    IntMat rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        Int f = d / g.denom;
        std::vector<Int> row;
        row.reserve(g.coords.size());
        for (const Int& c : g.coords) row.push_back(c * f);
        rows.push_back(std::move(row));
    }
    L.basis_int_ = hnf_rows(std::move(rows));
    L.basis_denom_ = d;
    for (const auto& row : L.basis_int_) L.basis_.push_back(ScaledVector(row, d));

    const int r = L.rank();
    L.gram_.assign(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= i; ++j) {
            Int p = pairing(L.basis_[i], L.basis_[j], L.form_);
            L.gram_[i][j] = p;
            L.gram_[j][i] = p;
        }
    Int det = determinant(L.gram_);
    L.det_abs_ = abs(det);
    L.even_ = true;
    for (int i = 0; i < r; ++i)
        if (mod_pos(L.gram_[i][i], 2) != 0) L.even_ = false;
    L.orientation_ = definiteness(L.gram_);
    return L;
}

LatticeHandle LatticeHandle::from_gram(IntMat gram) {
    AmbientForm f = AmbientForm::quadratic(std::move(gram));
    std::vector<ScaledVector> gens;
    for (int i = 0; i < f.dim; ++i) {
        std::vector<Int> e(f.dim, 0);
        e[i] = 1;
        gens.push_back(ScaledVector::integral(std::move(e)));
    }
    return from_generators(std::move(f), std::move(gens));
}

IntMat LatticeHandle::positive_gram() const {
    if (orientation_ > 0) return gram_;
    if (orientation_ < 0) {
        IntMat g = gram_;
        for (auto& row : g)
            for (auto& x : row) x = -x;
        return g;
    }
    throw error("positive_gram: lattice is not definite");
}

std::optional<std::vector<Rat>> LatticeHandle::rational_coords(const ScaledVector& v) const {
    if (v.dim() != form_.dim) throw error("membership: dimension mismatch");
    Int m = lcm(basis_denom_, v.denom);
    Int fb = m / basis_denom_, fv = m / v.denom;
    IntMat rows = basis_int_;
    if (fb != 1)
        for (auto& row : rows)
            for (auto& x : row) x *= fb;
    std::vector<Int> target;
    target.reserve(v.coords.size());
    for (const Int& c : v.coords) target.push_back(c * fv);
    return solve_echelon(rows, target);
}

std::optional<std::vector<Int>> LatticeHandle::integer_coords(const ScaledVector& v) const {
    auto c = rational_coords(v);
    if (!c) return std::nullopt;
    std::vector<Int> out;
    out.reserve(c->size());
    for (const Rat& x : *c) {
        if (x.get_den() != 1) return std::nullopt;
        out.push_back(x.get_num());
    }
    return out;
}

bool LatticeHandle::contains(const ScaledVector& v) const { return integer_coords(v).has_value(); }

ScaledVector LatticeHandle::vector_from_coords(const std::vector<Int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank()) throw error("vector_from_coords: bad length");
    std::vector<Int> acc(form_.dim, 0);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < form_.dim; ++j) acc[j] += coeffs[i] * basis_int_[i][j];
    return ScaledVector(std::move(acc), basis_denom_).canonicalized();
}

ScaledVector LatticeHandle::vector_from_coords(const std::vector<Rat>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank()) throw error("vector_from_coords: bad length");
    Int d = 1;
    for (const Rat& c : coeffs) d = lcm(d, Int(c.get_den()));
    std::vector<Int> acc(form_.dim, 0);
    for (int i = 0; i < rank(); ++i) {
        Int num = coeffs[i].get_num() * (d / coeffs[i].get_den());
        for (int j = 0; j < form_.dim; ++j) acc[j] += num * basis_int_[i][j];
    }
    return ScaledVector(std::move(acc), basis_denom_ * d).canonicalized();
}

LatticeHandle LatticeHandle::scaled(const Int& k) const {
    if (k <= 0) throw error("scaled: factor must be positive");
    std::vector<ScaledVector> gens;
    gens.reserve(basis_.size());
    for (const auto& b : basis_) gens.push_back(b.scaled(k));
    return from_generators(form_, std::move(gens));
}

}  // namespace latkit
