#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/enumerate.hpp"
#include "latkit/zoo.hpp"

using namespace latkit;

namespace {

Int root_census(const LatticeHandle& L) { return theta_coefficients(L, 2)[2]; }

Int perfect_sqrt(const Int& n) {
    Int r = sqrt(n);
    REQUIRE(r * r == n);
    return r;
}

}  // namespace

TEST_CASE("root lattices: determinant and root count") {
    struct Row {
        RootComponentSpec spec;
        Int det;
        Int roots;
    };
    std::vector<Row> table = {
        {{'A', 1}, 2, 2},   {{'A', 2}, 3, 6},    {{'A', 12}, 13, 156}, {{'D', 4}, 4, 24},
        {{'D', 9}, 4, 144}, {{'D', 24}, 4, 1104}, {{'E', 6}, 3, 72},   {{'E', 7}, 2, 126},
        {{'E', 8}, 1, 240},
    };
    for (const Row& row : table) {
        auto L = make_root_lattice(row.spec);
        CHECK(L.rank() == row.spec.rank);
        CHECK(L.det_abs() == row.det);
        CHECK(L.is_even());
        CHECK(root_census(L) == row.roots);
        CHECK(row.spec.determinant() == row.det);
        CHECK(row.spec.root_count() == row.roots);
    }
    CHECK_THROWS_AS(make_root_lattice({'E', 5}), error);
    CHECK_THROWS_AS(make_root_lattice({'Q', 3}), error);
}

TEST_CASE("every catalog entry builds with its declared invariants") {
    for (const CatalogEntry& entry : builtin_catalog()) {
        INFO(entry.name);
        auto L = entry.build();
        CHECK(L.rank() == entry.rank);
        CHECK(L.is_unimodular());
        CHECK(L.is_even() == entry.even);
        CHECK(root_census(L) == entry.a2);
    }
}

TEST_CASE("glued lattices contain their root components; glue index is the square root") {
    for (const CatalogEntry& entry : builtin_catalog()) {
        if (entry.kind != CatalogEntry::Kind::Glued) continue;
        INFO(entry.name);
        auto L = entry.build();
        Int root_det = 1;
        for (size_t i = 0; i < entry.glued.components.size(); ++i) {
            root_det *= entry.glued.components[i].determinant();
            for (const auto& g : component_generators(entry.glued.components, int(i)))
                CHECK(L.contains(g));
        }
        // unimodular overlattice: [L : R]^2 = det R
        perfect_sqrt(root_det);
    }
}

TEST_CASE("bad glue codes are rejected") {
    GluedLatticeSpec bad;
    bad.name = "bad";
    bad.components = {{'A', 2}};
    bad.glue_generators = {};  // A_2 alone has det 3
    CHECK_THROWS_AS(make_glued(bad), error);

    GluedLatticeSpec mismatch;
    mismatch.name = "mismatch";
    mismatch.components = {{'A', 2}};
    mismatch.glue_generators = {ScaledVector(std::vector<Int>{1, -1}, 2)};
    CHECK_THROWS_AS(make_glued(mismatch), error);
}

TEST_CASE("Gamma_4k is even exactly when k is even") {
    for (int k = 3; k <= 6; ++k) {
        auto G = make_gamma(4 * k);
        CHECK(G.is_unimodular());
        CHECK(G.is_even() == (k % 2 == 0));
    }
    CHECK_THROWS_AS(make_gamma(10), error);
}

TEST_CASE("modular theta identity") {
    CHECK(theta_by_modular_identity(600, 4) == 182160);
    CHECK(theta_by_modular_identity(312, 4) == 189072);
    CHECK(theta_by_modular_identity(0, 4) == 196560);
    CHECK(theta_by_modular_identity(0, 6) == 16773120);
    CHECK(theta_by_modular_identity(1104, 4) == theta_by_modular_identity(1104, 4));
    CHECK_THROWS_AS(theta_by_modular_identity(0, 5), error);
}

TEST_CASE("Leech: even unimodular without roots, with the stated witnesses") {
    auto L = make_leech();
    CHECK(L.rank() == 24);
    CHECK(L.is_unimodular());
    CHECK(L.is_even());
    CHECK(root_census(L) == 0);

    auto w6 = leech_witness(6);
    CHECK(norm(w6, L.ambient()) == 6);
    CHECK(L.contains(w6));
    auto w8 = leech_witness(8);
    CHECK(norm(w8, L.ambient()) == 8);
    CHECK(L.contains(w8));
    CHECK_THROWS_AS(leech_witness(5), error);
}

TEST_CASE("small theta-series cross-checks") {
    // E8: 1 + 240 q^2 + 2160 q^4 + ...
    auto e8 = make_root_lattice({'E', 8});
    auto t = theta_coefficients(e8, 4);
    CHECK(t[2] == 240);
    CHECK(t[4] == 2160);

    // A2: hexagonal lattice, 6 vectors each of norms 2 and 6, none of norm 4
    auto a2 = make_root_lattice({'A', 2});
    auto ta = theta_coefficients(a2, 6);
    CHECK(ta[2] == 6);
    CHECK(ta[4] == 0);
    CHECK(ta[6] == 6);
}
