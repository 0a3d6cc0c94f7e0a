#include "latkit/genus.hpp"

#include <algorithm>

#include "latkit/zoo.hpp"

namespace latkit {

namespace {

ScaledVector require_member(const LatticeHandle& L, const ScaledVector& w, const char* who) {
    if (!L.contains(w)) throw error(std::string(who) + ": vector " + w.str() + " is not in the lattice");
    return w;
}

// Direct Eq.-style signed half-sum over a coset minimum set: for each z the
// sign is (-1)^{((z+w)/2)^2}.
Int signed_half_sum(const CosetMinSet& cm, const ScaledVector& w, const AmbientForm& form) {
    Int sum = 0;
    for (const ScaledVector& z : cm.vectors) {
        Int half_norm = norm((z + w).scaled(Rat(1, 2)), form);
        sum += half_norm % 2 == 0 ? 1 : -1;
    }
    return exact_div(sum, 2);
}

}  // namespace

ExtremalityCertificate is_extremal(const LatticeHandle& L, const ScaledVector& w) {
    require_member(L, w, "is_extremal");
    ExtremalityCertificate cert;
    cert.w = w;
    Int w2 = norm(w, L.ambient());
    cert.verified_bound = floor_div(w2 - 1, 2);  // u^2 < w^2/2  <=>  u^2 <= this

    ShortVectorQuery q;
    q.lattice = &L;
    q.norm_bound = cert.verified_bound;
    q.mode = EnumMode::Visit;
    q.modulo_negation = true;  // the criterion is negation-symmetric
    q.visit = [&](const ScaledVector& u, const Int& u2) {
        if (cert.witness) return;
        if (abs(pairing(u, w, L.ambient())) > u2) cert.witness = u;
    };
    short_vectors(q);
    return cert;
}

std::map<Int, Int> s_census(const LatticeHandle& L, const ScaledVector& w, const Int& max_i) {
    require_member(L, w, "s_census");
    std::map<Int, Int> counts;
    for (Int i = 0; i <= max_i; ++i) counts[i] = 0;
    counts[0] = 1;  // S_0 = {0}
    // Precompute <b_j, w> for the lattice basis, so each visited vector only
    // needs an integer dot product on its basis coordinates.
    std::vector<Int> d;
    for (const ScaledVector& b : L.basis()) d.push_back(pairing(b, w, L.ambient()));

    ShortVectorQuery q;
    q.lattice = &L;
    q.norm_bound = max_i;
    q.mode = EnumMode::Visit;
    q.modulo_negation = true;  // handle u and -u from one representative
    q.visit_coords = [&](const std::vector<Int>& y, const Int& u2) {
        Int p = 0;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) p += y[j] * d[j];
        if (p == -u2) counts[u2] += 1;
        if (p == u2) counts[u2] += 1;  // the negated representative
    };
    short_vectors(q);
    return counts;
}

EtaReport eta(const LatticeHandle& L, const ScaledVector& w) {
    auto cert = is_extremal(L, w);
    if (!cert.valid())
        throw error("eta: w is not extremal (violating u = " + cert.witness->str() + ")");
    Int m = norm(w, L.ambient());
    if (m % 2 != 0) throw error("eta: w must have even norm");

    EtaReport report;
    report.w = w;
    report.m = m;
    report.s_counts = s_census(L, w, m / 2);

    // 1 - |S_1| + |S_2| - ... +- |S_{m/2-1}| -+ |S_{m/2}|/2
    Int value = 1;
    Int half = m / 2;
    for (Int i = 1; i < half; ++i) value += (i % 2 == 0 ? 1 : -1) * report.s_counts[i];
    if (half > 0)
        value += (half % 2 == 0 ? 1 : -1) * exact_div(report.s_counts[half], 2);
    report.eta_value = value;

    // cross-check against the direct signed sum over Min(w + 2L)
    CosetMinSet cm = coset_minima(w, L.scaled(2));
    if (cm.min_norm != m) throw error("eta: coset minimum disagrees with extremality");
    report.min_set_size = Int(cm.vectors.size());
    Int direct = signed_half_sum(cm, w, L.ambient());
    if (direct != value)
        throw error("eta: S-census sum " + value.get_str() + " != direct coset sum " +
                    direct.get_str());
    return report;
}

Int eta_general(const LatticeHandle& L, const ScaledVector& w, const ScaledVector& a, int m,
                EtaConvention convention) {
    require_member(L, w, "eta_general");
    require_member(L, a, "eta_general");
    Int w2 = norm(w, L.ambient());
    if ((w2 - m) % 2 != 0) throw error("eta_general: m must have the parity of w^2");
    if (m < 0) throw error("eta_general: negative m");
    auto cert = is_extremal(L, w);
    if (!cert.valid()) throw error("eta_general: w is not extremal");

    CosetMinSet cm = coset_minima(w, L.scaled(2));
    if (convention == EtaConvention::Paper)
        return pow_int(pairing(a, w, L.ambient()), m) * signed_half_sum(cm, w, L.ambient());

    Int sum = 0;
    for (const ScaledVector& z : cm.vectors) {
        Int half_norm = norm((z + w).scaled(Rat(1, 2)), L.ambient());
        Int sign = half_norm % 2 == 0 ? 1 : -1;
        sum += sign * pow_int(pairing(a, z, L.ambient()), m);
    }
    return exact_div(sum, 2);
}

FInvariantCertificate f2_certificate(const LatticeHandle& L, const ScaledVector& w) {
    auto cert = is_extremal(L, w);
    if (!cert.valid()) throw error("f2_certificate: w is not extremal");
    CosetMinSet cm = coset_minima(w, L.scaled(2));
    FInvariantCertificate out;
    out.n = 2;
    out.w = w;
    out.value = norm(w, L.ambient()) - 1;
    Int half = exact_div(Int(cm.vectors.size()), 2);
    out.residue = mod_pos(half, 2);
    out.valid = out.residue != 0;
    return out;
}

FInvariantCertificate fn_certificate(const LatticeHandle& L, int n, const ScaledVector& w) {
    if (n <= 2) throw error("fn_certificate: n must exceed 2");
    EtaReport report = eta(L, w);  // enforces extremality and even norm
    FInvariantCertificate out;
    out.n = n;
    out.w = w;
    out.value = exact_div(report.m, 2);
    out.residue = mod_pos(report.eta_value, n);
    out.valid = out.residue != 0;
    return out;
}

namespace {

void try_coset(const LatticeHandle& L, const LatticeHandle& twoL, int n, const Int& norm_cap,
               const ScaledVector& rep, FnExhaustiveResult& res) {
    CosetMinSet cm = coset_minima(rep, twoL);
    if (cm.min_norm == 0 || cm.min_norm > norm_cap) return;
    if (n == 2) {
        FInvariantCertificate cert;
        cert.n = 2;
        cert.w = cm.vectors.front();
        cert.value = cm.min_norm - 1;
        cert.residue = mod_pos(exact_div(Int(cm.vectors.size()), 2), 2);
        cert.valid = cert.residue != 0;
        if (cert.valid) res.certificates.push_back(cert);
        return;
    }
    if (cm.min_norm % 2 != 0) return;  // the m = 0 route needs even norm
    for (const ScaledVector& w : cm.vectors) {
        FInvariantCertificate cert;
        cert.n = n;
        cert.w = w;
        cert.value = exact_div(cm.min_norm, 2);
        cert.residue = mod_pos(signed_half_sum(cm, w, L.ambient()), n);
        cert.valid = cert.residue != 0;
        if (cert.valid) {
            res.certificates.push_back(cert);
            return;  // one witness per coset suffices
        }
    }
}

// Rootless even unimodular rank 24: every nonzero class of L/2L contains,
// up to sign, exactly one vector of norm 4, one of norm 6, or 48 vectors of
// norm 8 forming an orthogonal frame; certified by the class count identity
// a4/2 + a6/2 + a8/48 + 1 = 2^24.
bool leech_census_route(const LatticeHandle& L, int n, const Int& norm_cap,
                        const std::vector<ScaledVector>& witnesses, FnExhaustiveResult& res) {
    Int a4 = theta_coefficients(L, 4)[4];
    Int a6 = theta_by_modular_identity(0, 6);
    Int a8 = theta_by_modular_identity(0, 8);
    if (a4 != theta_by_modular_identity(0, 4)) return false;
    if (a4 / 2 + a6 / 2 + a8 / 48 + 1 != Int(1) << 24) return false;

    bool saw6 = false, saw8 = false;
    LatticeHandle twoL = L.scaled(2);
    for (const ScaledVector& w : witnesses) {
        Int w2 = norm(w, L.ambient());
        CosetMinSet cm = coset_minima(w, twoL);
        if (cm.min_norm != w2) throw error("fn_exhaustive: witness is not extremal");
        if (w2 == 6) {
            if (cm.vectors.size() != 2) throw error("fn_exhaustive: norm-6 class size != 2");
            saw6 = true;
        } else if (w2 == 8) {
            if (cm.vectors.size() != 48) throw error("fn_exhaustive: norm-8 class size != 48");
            for (const ScaledVector& z : cm.vectors)
                for (const ScaledVector& z2 : cm.vectors)
                    if (!(z2 == z) && !(z2 == -z) && pairing(z, z2, L.ambient()) != 0)
                        throw error("fn_exhaustive: norm-8 class is not an orthogonal frame");
            saw8 = true;
        }
        try_coset(L, twoL, n, norm_cap, w, res);
    }
    // class-type values: norm 4 gives |Min/±| = 1 (odd) and eta = 1; norm 6
    // likewise; norm 8 gives |Min/±| = 24 (even) and eta = 24 = 0 mod 4, 8
    std::vector<Int> values;
    if (norm_cap >= 4) values.push_back(n == 2 ? Int(3) : Int(2));
    if (norm_cap >= 6) values.push_back(n == 2 ? Int(5) : Int(3));
    if (!values.empty()) res.value = values.back();
    res.exhaustive = saw6 && (norm_cap < 8 || saw8) && norm_cap <= 8;
    return true;
}

}  // namespace

FnExhaustiveResult fn_exhaustive(const LatticeHandle& L, int n, const Int& norm_cap,
                                 const std::vector<ScaledVector>& sample_witnesses,
                                 int max_exhaustive_rank) {
    if (n < 2) throw error("fn_exhaustive: n must be at least 2");
    FnExhaustiveResult res;
    res.n = n;
    res.norm_cap = norm_cap;
    const int r = L.rank();

    if (r <= max_exhaustive_rank) {
        LatticeHandle twoL = L.scaled(2);
        for (long mask = 1; mask < (1L << r); ++mask) {
            std::vector<Int> coeffs(r, 0);
            for (int i = 0; i < r; ++i)
                if (mask & (1L << i)) coeffs[i] = 1;
            try_coset(L, twoL, n, norm_cap, L.vector_from_coords(coeffs), res);
        }
        res.exhaustive = true;
    } else if (r == 24 && L.is_even() && L.is_unimodular() && theta_coefficients(L, 2)[2] == 0 &&
               leech_census_route(L, n, norm_cap, sample_witnesses, res)) {
        // handled
    } else {
        LatticeHandle twoL = L.scaled(2);
        for (const ScaledVector& w : sample_witnesses)
            try_coset(L, twoL, n, norm_cap, require_member(L, w, "fn_exhaustive"), res);
        res.exhaustive = false;
    }

    for (const auto& cert : res.certificates)
        if (!res.value || cert.value > *res.value) res.value = cert.value;
    return res;
}

DeltaReport characteristic_coset(const LatticeHandle& L) {
    const int r = L.rank();
    if (L.orientation() != 1) throw error("characteristic_coset: lattice must be positive definite");
    const IntMat& g = L.gram();
    std::vector<Int> diag(r);
    for (int i = 0; i < r; ++i) diag[i] = g[i][i];
    auto x = solve_mod2(g, diag);
    if (!x) throw error("characteristic_coset: characteristic system is inconsistent");
    std::vector<Int> coeffs(r);
    for (int i = 0; i < r; ++i) coeffs[i] = (*x)[i];
    DeltaReport report;
    report.char_rep = L.vector_from_coords(coeffs);
    CosetMinSet cm = coset_minima(report.char_rep, L.scaled(2));
    report.min_char_norm = cm.min_norm;
    report.delta = exact_div(Int(r) - cm.min_norm, 8);
    return report;
}

G4LowerBoundReport g4_lower_bound(std::optional<Int> f2, std::optional<Int> f4,
                                  std::optional<Int> f8, std::optional<Int> delta) {
    G4LowerBoundReport report;
    report.f2 = f2;
    report.f4 = f4;
    report.f8 = f8;
    report.delta = delta;
    Int best = 0;
    if (f2) best = std::max(best, *f2);
    if (f4) best = std::max(best, Int(2 * *f4 - 1));
    if (f8) {
        Int from_f8 = 2 * *f8 - (*f8 % 2 == 0 ? 2 : 1);
        best = std::max(best, from_f8);
    }
    if (delta) best = std::max(best, Int(2 * *delta - 1));
    report.bound = best;
    return report;
}

}  // namespace latkit
