#include "latkit/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace latkit {

LdlData ldl_decompose(const IntMat& gram) {
    const int n = static_cast<int>(gram.size());
    LdlData out;
    out.n = n;
    out.lower.assign(n, std::vector<Rat>(n, Rat(0)));
    out.diag.assign(n, Rat(0));
    // Column-by-column elimination: a[i][j] holds the running Schur complement.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = gram[i][j];
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0) throw error("ldl_decompose: non-positive pivot; Gram is not positive definite");
        out.diag[k] = a[k][k];
        out.lower[k][k] = 1;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / a[k][k];
            out.lower[i][k] = f;
            for (int j = k + 1; j <= i; ++j) {
                a[i][j] -= f * a[k][j];
                a[j][i] = a[i][j];
            }
        }
    }
    return out;
}

namespace {

struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> b;  // squared Gram-Schmidt norms
};

Gso compute_gso(const IntMat& g) {
    const int n = static_cast<int>(g.size());
    Gso s;
    s.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    s.b.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat v = g[i][j];
            for (int k = 0; k < j; ++k) v -= s.mu[i][k] * s.mu[j][k] * s.b[k];
            if (s.b[j] == 0) throw error("lll: degenerate Gram");
            s.mu[i][j] = v / s.b[j];
        }
        Rat v = g[i][i];
        for (int k = 0; k < i; ++k) v -= s.mu[i][k] * s.mu[i][k] * s.b[k];
        if (v <= 0) throw error("lll: Gram is not positive definite");
        s.b[i] = v;
        s.mu[i][i] = 1;
    }
    return s;
}

void row_op(IntMat& g, IntMat& u, int i, int j, const Int& q) {
    // basis_i -= q * basis_j, applied symmetrically to the Gram matrix
    const int n = static_cast<int>(g.size());
    for (int c = 0; c < n; ++c) g[i][c] -= q * g[j][c];
    for (int r = 0; r < n; ++r) g[r][i] -= q * g[r][j];
    for (size_t c = 0; c < u[i].size(); ++c) u[i][c] -= q * u[j][c];
}

void swap_rows(IntMat& g, IntMat& u, int i, int j) {
    const int n = static_cast<int>(g.size());
    std::swap(u[i], u[j]);
    for (int c = 0; c < n; ++c) std::swap(g[i][c], g[j][c]);
    for (int r = 0; r < n; ++r) std::swap(g[r][i], g[r][j]);
}

}  // namespace

GramReduction lll_reduce_gram(IntMat gram) {
    const int n = static_cast<int>(gram.size());
    IntMat u = identity_mat(n);
    if (n <= 1) return {std::move(gram), std::move(u)};
    const Rat delta(3, 4);
    Gso s = compute_gso(gram);
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(s.mu[k][j]);
            if (q != 0) {
                row_op(gram, u, k, j, q);
                for (int c = 0; c <= j; ++c) s.mu[k][c] -= Rat(q) * s.mu[j][c];
            }
        }
        Rat lhs = s.b[k];
        Rat rhs = (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.b[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            swap_rows(gram, u, k, k - 1);
            s = compute_gso(gram);
            k = std::max(k - 1, 1);
        }
    }
    return {std::move(gram), std::move(u)};
}

namespace {

// Depth-first exact enumeration of x with Q(x + tau) <= bound, where
// Q = sum_i diag_i (x_i + tau_i + sum_{j>i} lower[j][i] (x_j + tau_j))^2.
// With `half` set (requires tau = 0) only one of {x,-x} is visited.
// With `shrink` set the bound tightens to each new best norm found.
//
// The inner loop runs entirely over integers: per level i a scale M_i clears
// the denominators of lower[.][i] and of tau, and a global scale G makes the
// accumulated norm integral (G * diag_i / M_i^2 is an integer weight).
struct Enumerator {
    const LdlData* ldl = nullptr;
    std::vector<Rat> tau;
    bool half = false;
    bool shrink = false;
    Rat bound;
    std::function<void(const std::vector<Int>&, const Rat&)> out;

    std::vector<Int> x;
    std::vector<Int> s;       // (x_j + tau_j) * T at the levels currently fixed
    Int T;                    // lcm of tau denominators
    std::vector<Int> taus;    // tau_j * T
    std::vector<Int> tauM;    // tau_i * M_i
    std::vector<Int> M;       // per-level scale: T * lcm_j den(lower[j][i])
    std::vector<IntMat::value_type> A;  // A[i][j] = lower[j][i] * M_i / T  (j > i)
    Int G;                    // global norm scale: lcm_i of M_i^2 * den(diag_i)
    std::vector<Int> weight;  // G * diag_i / M_i^2
    Int scaled_bound;         // floor(bound * G)

    void run() {
        const int n = ldl->n;
        x.assign(n, 0);
        if (bound < 0) return;
        if (n == 0) {
            out(x, Rat(0));
            return;
        }

        T = 1;
        for (const Rat& t : tau) T = lcm(T, t.get_den());
        taus.resize(n);
        for (int j = 0; j < n; ++j) taus[j] = Rat(tau[j] * T).get_num();
        s = taus;  // levels above the cursor are initialised as x_j = 0

        M.assign(n, Int(1));
        A.assign(n, std::vector<Int>(n, Int(0)));
        tauM.resize(n);
        G = 1;
        for (int i = 0; i < n; ++i) {
            Int d(1);
            for (int j = i + 1; j < n; ++j) d = lcm(d, ldl->lower[j][i].get_den());
            Int m = T * d;  // divisible by T, so A[i][j] = lower[j][i] * m / T is integral
            M[i] = m;
            for (int j = i + 1; j < n; ++j) A[i][j] = Rat(ldl->lower[j][i] * m / T).get_num();
            tauM[i] = Rat(tau[i] * m).get_num();
            G = lcm(G, m * m * ldl->diag[i].get_den());
        }
        weight.resize(n);
        for (int i = 0; i < n; ++i) weight[i] = Rat(ldl->diag[i] * G / (M[i] * M[i])).get_num();
        {
            Rat sb = bound * G;
            scaled_bound = floor_rat(sb);
        }

        descend(n - 1, Int(0), true);
    }

    void descend(int level, const Int& used, bool upper_zero) {
        // c * M_level, accumulated over the fixed deeper levels
        Int c = tauM[level];
        for (int j = level + 1; j < ldl->n; ++j)
            if (s[j] != 0) c += A[level][j] * s[j];
        const Int& m = M[level];

        auto attempt = [&](const Int& k) -> bool {
            Int y = c + k * m;  // y_level * M_level
            Int norm = used + weight[level] * y * y;
            if (norm > scaled_bound) return false;
            x[level] = k;
            s[level] = taus[level] + k * T;
            if (level == 0) {
                if (shrink && norm < scaled_bound) scaled_bound = norm;
                out(x, Rat(norm) / Rat(G));
            } else {
                descend(level - 1, norm, upper_zero && k == 0);
            }
            return true;
        };

        if (half && upper_zero) {
            for (Int k = 0;; ++k)
                if (!attempt(k)) break;
        } else {
            // k0 = round(-c / m): nearest integer (ties either way are fine)
            Int k0;
            {
                Int num = 2 * (-c) + m;  // round(p/q) = floor((2p + q) / (2q))
                k0 = floor_div(num, 2 * m);
            }
            for (Int k = k0;; ++k)
                if (!attempt(k)) break;
            for (Int k = k0 - 1;; --k)
                if (!attempt(k)) break;
        }
        x[level] = 0;
        s[level] = taus[level];
    }
};

std::vector<Int> to_original_coords(const std::vector<Int>& x, const IntMat& u) {
    const int n = static_cast<int>(u.size());
    std::vector<Int> y(n, 0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) y[j] += x[i] * u[i][j];
    }
    return y;
}

Int as_int(const Rat& q, const char* what) {
    if (q.get_den() != 1) throw error(std::string(what) + ": non-integral norm " + q.get_str());
    return q.get_num();
}

IntMat unimodular_inverse(const IntMat& u) {
    const int n = static_cast<int>(u.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = u[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw error("unimodular_inverse: singular matrix");
        std::swap(a[p], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int c = 0; c < 2 * n; ++c) a[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    IntMat out(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a[i][n + j].get_den() != 1) throw error("unimodular_inverse: non-integer inverse");
            out[i][j] = a[i][n + j].get_num();
        }
    return out;
}

}  // namespace

ShortVectorResult short_vectors(const ShortVectorQuery& query) {
    if (!query.lattice) throw error("short_vectors: no lattice");
    const LatticeHandle& L = *query.lattice;
    if (query.norm_bound < 0) throw error("short_vectors: negative bound");
    ShortVectorResult res;
    if (L.rank() == 0 || query.norm_bound == 0) return res;

    GramReduction red = lll_reduce_gram(L.positive_gram());
    LdlData ldl = ldl_decompose(red.reduced_gram);

    std::vector<std::pair<Int, ScaledVector>> collected;
    const std::int64_t pair_mult = query.modulo_negation ? 1 : 2;

    Enumerator en;
    en.ldl = &ldl;
    en.tau.assign(ldl.n, Rat(0));
    en.half = true;
    en.bound = query.norm_bound;
    en.out = [&](const std::vector<Int>& x, const Rat& qnorm) {
        Int nrm = as_int(qnorm, "short_vectors");
        if (nrm == 0) return;  // skip the zero vector
        res.counts[nrm] += pair_mult;
        res.total += pair_mult;
        if (query.mode == EnumMode::CountOnly) return;
        if (query.mode == EnumMode::Visit && query.visit_coords) {
            std::vector<Int> y = to_original_coords(x, red.transform);
            query.visit_coords(y, nrm);
            if (!query.modulo_negation) {
                for (Int& c : y) c = -c;
                query.visit_coords(y, nrm);
            }
            return;
        }
        ScaledVector v = L.vector_from_coords(to_original_coords(x, red.transform));
        if (query.mode == EnumMode::Visit) {
            query.visit(v, nrm);
            if (!query.modulo_negation) query.visit(-v, nrm);
            return;
        }
        if (static_cast<std::int64_t>(collected.size()) + pair_mult > query.memory_cap)
            throw error("short_vectors: collect mode exceeds memory cap");
        collected.emplace_back(nrm, v);
        if (!query.modulo_negation) collected.emplace_back(nrm, -v);
    };
    en.run();

    if (query.mode == EnumMode::Collect) {
        std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        res.vectors.reserve(collected.size());
        for (auto& [nrm, v] : collected) res.vectors.push_back(std::move(v));
    }
    return res;
}

CosetMinSet coset_minima(const ScaledVector& t, const LatticeHandle& sublattice) {
    const LatticeHandle& L = sublattice;
    CosetMinSet out;
    out.target = t;
    if (L.rank() == 0) {
        out.min_norm = norm(t, L.ambient());
        out.vectors = {t};
        return out;
    }
    auto coords = L.rational_coords(t);
    if (!coords) throw error("coset_minima: target not in the rational span of the sublattice");

    GramReduction red = lll_reduce_gram(L.positive_gram());
    LdlData ldl = ldl_decompose(red.reduced_gram);
    IntMat uinv = unimodular_inverse(red.transform);

    // Coefficients of t in the reduced basis.
    const int n = ldl.n;
    std::vector<Rat> tau(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (uinv[j][i] != 0) tau[i] += (*coords)[j] * Rat(uinv[j][i]);

    // Initial radius from the coordinate-rounded coset point.
    std::vector<Rat> start(n);
    for (int i = 0; i < n; ++i) start[i] = tau[i] - Rat(round_rat(tau[i]));
    Rat r0(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r0 += start[i] * Rat(red.reduced_gram[i][j]) * start[j];
    // The target itself (x = 0) is also in the search space; it often gives a
    // much tighter initial radius than the rounded coordinate start.
    r0 = std::min(r0, Rat(abs(norm(t, L.ambient()))));

    std::vector<std::pair<Rat, std::vector<Int>>> found;
    Enumerator en;
    en.ldl = &ldl;
    en.tau = tau;
    en.shrink = true;
    en.bound = r0;
    en.out = [&](const std::vector<Int>& x, const Rat& qnorm) { found.emplace_back(qnorm, x); };
    en.run();

    Rat min = r0;
    for (const auto& [nrm, x] : found) min = std::min(min, nrm);
    out.min_norm = as_int(min, "coset_minima");
    for (const auto& [nrm, x] : found) {
        if (nrm != min) continue;
        ScaledVector lv = L.vector_from_coords(to_original_coords(x, red.transform));
        out.vectors.push_back((t + lv).canonicalized());
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end()), out.vectors.end());
    return out;
}

std::map<Int, Int> theta_coefficients(const LatticeHandle& lattice, const Int& up_to) {
    std::map<Int, Int> theta;
    for (Int i = 0; i <= up_to; ++i) theta[i] = 0;
    theta[0] = 1;
    if (lattice.rank() == 0) return theta;
    ShortVectorQuery q;
    q.lattice = &lattice;
    q.norm_bound = up_to;
    q.mode = EnumMode::CountOnly;
    ShortVectorResult res = short_vectors(q);
    for (const auto& [nrm, count] : res.counts) theta[nrm] = count;
    return theta;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string census_payload(const std::map<Int, Int>& counts) {
    std::ostringstream body;
    for (const auto& [nrm, c] : counts) body << nrm.get_str() << " " << c.get_str() << "\n";
    return body.str();
}

}  // namespace

std::string CensusCache::key_path(const IntMat& gram, const Int& bound) const {
    std::ostringstream key;
    key << "b=" << bound.get_str() << ";";
    for (const auto& row : gram) {
        for (const auto& x : row) key << x.get_str() << ",";
        key << ";";
    }
    std::ostringstream name;
    name << std::hex << fnv1a(key.str());
    return dir_ + "/census-" + name.str() + ".txt";
}

std::optional<std::map<Int, Int>> CensusCache::load(const IntMat& gram, const Int& bound) const {
    std::ifstream in(key_path(gram, bound));
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    std::ostringstream rest;
    rest << in.rdbuf();
    std::ostringstream expect;
    expect << "latkit-census-v1 " << std::hex << fnv1a(rest.str());
    if (header != expect.str()) return std::nullopt;  // corrupt: recompute
    std::map<Int, Int> counts;
    std::istringstream body(rest.str());
    std::string a, b;
    while (body >> a >> b) counts[Int(a)] = Int(b);
    return counts;
}

void CensusCache::store(const IntMat& gram, const Int& bound, const std::map<Int, Int>& counts) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::string payload = census_payload(counts);
    std::ofstream outf(key_path(gram, bound));
    outf << "latkit-census-v1 " << std::hex << fnv1a(payload) << "\n" << payload;
}

std::map<Int, Int> theta_coefficients_cached(const LatticeHandle& lattice, const Int& up_to,
                                             const CensusCache* cache) {
    if (cache && lattice.rank() > 0) {
        auto hit = cache->load(lattice.positive_gram(), up_to);
        if (hit) return *hit;
    }
    auto counts = theta_coefficients(lattice, up_to);
    if (cache && lattice.rank() > 0) cache->store(lattice.positive_gram(), up_to, counts);
    return counts;
}

}  // namespace latkit
