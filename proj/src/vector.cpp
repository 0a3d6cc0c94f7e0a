#include "latkit/vector.hpp"

#include <algorithm>
#include <sstream>

namespace latkit {

AmbientForm AmbientForm::quadratic(IntMat g) {
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g[i].size()) != n) throw error("quadratic form: matrix not square");
        for (int j = 0; j < i; ++j)
            if (g[i][j] != g[j][i]) throw error("quadratic form: matrix not symmetric");
    }
    AmbientForm f;
    f.kind = Kind::Quadratic;
    f.dim = n;
    f.gram = std::make_shared<const IntMat>(std::move(g));
    return f;
}

bool AmbientForm::operator==(const AmbientForm& o) const {
    if (kind != o.kind || dim != o.dim) return false;
    if (kind != Kind::Quadratic) return true;
    return gram == o.gram || *gram == *o.gram;
}

ScaledVector::ScaledVector(std::vector<Int> c, Int d) : coords(std::move(c)), denom(std::move(d)) {
    if (denom <= 0) throw error("ScaledVector: denominator must be positive");
}

ScaledVector ScaledVector::zero(int dim) {
    return ScaledVector(std::vector<Int>(dim, 0), 1);
}

bool ScaledVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

ScaledVector ScaledVector::canonicalized() const {
    Int g = denom;
    for (const Int& c : coords) {
        g = gcd(g, c);
        if (g == 1) return *this;
    }
    if (g == 0) return ScaledVector(coords, 1);  // zero vector
    ScaledVector r(coords, denom / g);
    for (Int& c : r.coords) c /= g;
    return r;
}

ScaledVector ScaledVector::operator-() const {
    ScaledVector r = *this;
    for (Int& c : r.coords) c = -c;
    return r;
}

ScaledVector ScaledVector::operator+(const ScaledVector& o) const {
    if (dim() != o.dim()) throw error("ScaledVector: dimension mismatch");
    Int d = lcm(denom, o.denom);
    Int a = d / denom, b = d / o.denom;
    ScaledVector r;
    r.denom = d;
    r.coords.reserve(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) r.coords.push_back(coords[i] * a + o.coords[i] * b);
    return r;
}

ScaledVector ScaledVector::operator-(const ScaledVector& o) const { return *this + (-o); }

ScaledVector ScaledVector::scaled(const Int& k) const {
    ScaledVector r = *this;
    for (Int& c : r.coords) c *= k;
    return r;
}

ScaledVector ScaledVector::scaled(const Rat& k) const {
    ScaledVector r;
    r.denom = denom * k.get_den();
    r.coords.reserve(coords.size());
    for (const Int& c : coords) r.coords.push_back(c * k.get_num());
    if (r.denom < 0) {
        r.denom = -r.denom;
        for (Int& c : r.coords) c = -c;
    }
    return r;
}

bool ScaledVector::operator==(const ScaledVector& o) const {
    if (dim() != o.dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (coords[i] * o.denom != o.coords[i] * denom) return false;
    return true;
}

bool ScaledVector::operator<(const ScaledVector& o) const {
    for (int i = 0; i < dim() && i < o.dim(); ++i) {
        Int a = coords[i] * o.denom, b = o.coords[i] * denom;
        if (a != b) return a < b;
    }
    return dim() < o.dim();
}

std::string ScaledVector::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) out << ",";
        out << coords[i];
        if (denom != 1) out << "/" << denom;
    }
    out << ")";
    return out.str();
}

Rat pairing_rat(const ScaledVector& u, const ScaledVector& v, const AmbientForm& form) {
    if (u.dim() != form.dim || v.dim() != form.dim)
        throw error("pairing: dimension mismatch with ambient form");
    Int acc = 0;
    switch (form.kind) {
        case AmbientForm::Kind::Euclidean:
            for (int i = 0; i < form.dim; ++i) acc += u.coords[i] * v.coords[i];
            break;
        case AmbientForm::Kind::Lorentzian:
            acc = u.coords[0] * v.coords[0];
            for (int i = 1; i < form.dim; ++i) acc -= u.coords[i] * v.coords[i];
            break;
        case AmbientForm::Kind::Quadratic: {
            const IntMat& g = *form.gram;
            for (int i = 0; i < form.dim; ++i) {
                if (u.coords[i] == 0) continue;
                Int row = 0;
                for (int j = 0; j < form.dim; ++j) row += g[i][j] * v.coords[j];
                acc += u.coords[i] * row;
            }
            break;
        }
    }
    Rat r(acc, u.denom * v.denom);
    r.canonicalize();
    return r;
}

Int pairing(const ScaledVector& u, const ScaledVector& v, const AmbientForm& form) {
    Rat r = pairing_rat(u, v, form);
    if (r.get_den() != 1)
        throw error("pairing: non-integral value " + r.get_str() + " for " + u.str() + " . " + v.str());
    return r.get_num();
}

}  // namespace latkit
