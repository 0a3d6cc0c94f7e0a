#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "latkit/enumerate.hpp"

using namespace latkit;

namespace {

// Independent oracle: box enumeration over basis coefficients, with per-axis
// bounds from the diagonal of the inverse Gram (|x_i|^2 <= bound * (G^-1)_ii).
std::map<Int, Int> brute_force_census(const IntMat& gram, const Int& bound) {
    const int n = static_cast<int>(gram.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = gram[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int c = 0; c < 2 * n; ++c) a[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rat f = a[r][col];
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<long> box(n);
    for (int i = 0; i < n; ++i) {
        Rat lim = Rat(bound) * a[i][n + i];
        long b = 0;
        while (Rat((b + 1) * (b + 1)) <= lim) ++b;
        box[i] = b;
    }
    std::map<Int, Int> counts;
    std::vector<long> x(n, 0);
    auto qform = [&](const std::vector<long>& v) {
        Int q = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += Int(v[i]) * gram[i][j] * Int(v[j]);
        return q;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            Int q = qform(x);
            if (q > 0 && q <= bound) counts[q] += 1;
            return;
        }
        for (long k = -box[i]; k <= box[i]; ++k) {
            x[i] = k;
            rec(i + 1);
        }
    };
    rec(0);
    return counts;
}

IntMat random_gram(std::mt19937& rng, int n) {
    // B^T B + I for a random small integer B: positive definite by construction
    IntMat b(n, std::vector<Int>(n));
    for (auto& row : b)
        for (auto& x : row) x = int(rng() % 7) - 3;
    IntMat g(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) g[i][j] += b[i][k] * b[j][k];
            if (i == j) g[i][j] += 1;
        }
    return g;
}

IntMat random_unimodular(std::mt19937& rng, int n) {
    IntMat u = identity_mat(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = rng() % n, j = rng() % n;
        if (i == j) continue;
        Int c = int(rng() % 5) - 2;
        for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    }
    return u;
}

}  // namespace

TEST_CASE("ldl examples") {
    LdlData one = ldl_decompose({{2}});
    CHECK(one.diag[0] == 2);

    LdlData a2 = ldl_decompose({{2, -1}, {-1, 2}});
    CHECK(a2.diag[0] == 2);
    CHECK(a2.diag[1] == Rat(3, 2));

    CHECK_THROWS_AS(ldl_decompose({{0, 1}, {1, 0}}), error);
}

TEST_CASE("ldl reconstructs the Gram and E8 pivots multiply to det") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMat g = random_gram(rng, 4);
        LdlData ldl = ldl_decompose(g);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat acc(0);
                for (int k = 0; k < 4; ++k) acc += ldl.lower[i][k] * ldl.diag[k] * ldl.lower[j][k];
                CHECK(acc == Rat(g[i][j]));
            }
    }

    IntMat e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
              {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, -1}, {0, 0, 0, 0, -1, 2, -1, 0},
              {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, 0, 0, -1, 0, 0, 2}};
    LdlData ldl = ldl_decompose(e8);
    Rat prod(1);
    for (const Rat& d : ldl.diag) {
        CHECK(d > 0);
        prod *= d;
    }
    CHECK(prod == 1);
}

TEST_CASE("short vector census agrees with the brute-force oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 3;
        IntMat g = random_gram(rng, n);
        auto L = LatticeHandle::from_gram(g);
        Int bound = 4 + trial % 5;
        auto expect = brute_force_census(g, bound);
        auto got = theta_coefficients(L, bound);
        for (Int i = 1; i <= bound; ++i) CHECK(got[i] == (expect.count(i) ? expect[i] : 0));
    }
}

TEST_CASE("census is basis invariant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 4;
        IntMat g = random_gram(rng, n);
        IntMat u = random_unimodular(rng, n);
        IntMat g2 = mat_mul(mat_mul(u, g), [&] {
            IntMat ut(n, std::vector<Int>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ut[i][j] = u[j][i];
            return ut;
        }());
        auto t1 = theta_coefficients(LatticeHandle::from_gram(g), 8);
        auto t2 = theta_coefficients(LatticeHandle::from_gram(g2), 8);
        CHECK(t1 == t2);
    }
}

TEST_CASE("full-mode output is closed under negation with even counts") {
    std::mt19937 rng(31);
    IntMat g = random_gram(rng, 3);
    auto L = LatticeHandle::from_gram(g);
    ShortVectorQuery q;
    q.lattice = &L;
    q.norm_bound = 9;
    ShortVectorResult res = short_vectors(q);
    for (const auto& [nrm, count] : res.counts) CHECK(count % 2 == 0);
    for (const auto& v : res.vectors) {
        CHECK(std::find(res.vectors.begin(), res.vectors.end(), -v) != res.vectors.end());
    }
    ShortVectorQuery qh = q;
    qh.modulo_negation = true;
    ShortVectorResult half = short_vectors(qh);
    CHECK(half.total * 2 == res.total);
}

TEST_CASE("coset minima: zero coset and translation invariance") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + trial % 3;
        IntMat g = random_gram(rng, n);
        auto L = LatticeHandle::from_gram(g);
        auto twoL = L.scaled(2);

        std::vector<Int> wc(n);
        for (auto& c : wc) c = int(rng() % 7) - 3;
        ScaledVector w = L.vector_from_coords(wc);

        auto cm = coset_minima(w, twoL);
        CHECK(!cm.vectors.empty());
        for (const auto& v : cm.vectors) CHECK(norm(v, L.ambient()) == cm.min_norm);

        // translating the target by a sublattice vector leaves Min unchanged
        std::vector<Int> shift(n);
        for (auto& c : shift) c = 2 * (int(rng() % 5) - 2);
        auto cm2 = coset_minima(w + L.vector_from_coords(shift), twoL);
        CHECK(cm.min_norm == cm2.min_norm);
        REQUIRE(cm.vectors.size() == cm2.vectors.size());
        for (size_t i = 0; i < cm.vectors.size(); ++i) CHECK(cm.vectors[i] == cm2.vectors[i]);
    }

    auto L = LatticeHandle::from_gram({{2, 0}, {0, 2}});
    ScaledVector member = L.vector_from_coords(std::vector<Int>{3, -2});
    auto cm = coset_minima(member, L);
    CHECK(cm.min_norm == 0);
    REQUIRE(cm.vectors.size() == 1);
    CHECK(cm.vectors[0].is_zero());
}

TEST_CASE("coset minima against brute force") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 2;
        IntMat g = random_gram(rng, n);
        auto L = LatticeHandle::from_gram(g);
        auto twoL = L.scaled(2);
        std::vector<Int> wc(n);
        for (auto& c : wc) c = int(rng() % 9) - 4;
        ScaledVector w = L.vector_from_coords(wc);
        auto cm = coset_minima(w, twoL);

        // oracle: scan a generous coefficient box around the target
        Int best(-1);
        int hits = 0;
        std::vector<long> x(n);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                Int q = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        q += (wc[a] + 2 * Int(x[a])) * g[a][b] * (wc[b] + 2 * Int(x[b]));
                if (best < 0 || q < best) {
                    best = q;
                    hits = 1;
                } else if (q == best) {
                    ++hits;
                }
                return;
            }
            for (long k = -10; k <= 10; ++k) {
                x[i] = k;
                rec(i + 1);
            }
        };
        rec(0);
        CHECK(cm.min_norm == best);
        CHECK(static_cast<int>(cm.vectors.size()) == hits);
    }
}

TEST_CASE("census cache round trip and corruption detection") {
    auto L = LatticeHandle::from_gram({{2, -1}, {-1, 2}});
    std::string dir = "./cache-test-tmp";
    CensusCache cache(dir);
    auto fresh = theta_coefficients_cached(L, 6, &cache);
    auto warm = theta_coefficients_cached(L, 6, &cache);
    CHECK(fresh == warm);
    CHECK(cache.load(L.positive_gram(), 6).has_value());

    // corrupt every cache file; the loader must reject them
    for (auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream f(entry.path());
        f << "garbage\n1 999\n";
    }
    CHECK_FALSE(cache.load(L.positive_gram(), 6).has_value());
    auto recomputed = theta_coefficients_cached(L, 6, &cache);
    CHECK(recomputed == fresh);
    std::filesystem::remove_all(dir);
}
