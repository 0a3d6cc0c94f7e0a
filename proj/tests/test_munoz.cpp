#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/munoz.hpp"

using namespace latkit;
using P = BivariatePolynomial;

TEST_CASE("polynomial arithmetic basics") {
    P a = P::monomial(3, 1, 0, P::Vars::AlphaBeta);
    P b = P::monomial(2, 0, 1, P::Vars::AlphaBeta);
    P s = a + b;
    CHECK(s.coeff(1, 0) == 3);
    CHECK(s.coeff(0, 1) == 2);
    CHECK((s - s).is_zero());
    P prod = s * s;
    CHECK(prod.coeff(2, 0) == 9);
    CHECK(prod.coeff(1, 1) == 12);
    CHECK(prod.coeff(0, 2) == 4);
    CHECK(prod.scaled(2).coeff(1, 1) == 24);
    CHECK(prod.scaled(2).divided(2) == prod);
    CHECK_THROWS_AS(prod.divided(5), error);
    CHECK_THROWS_AS(a + P::monomial(1, 0, 0, P::Vars::AlphaEps), error);
    CHECK(P::constant(0, P::Vars::AlphaBeta).is_zero());
    CHECK(s.str() == "3a + 2b");
}

TEST_CASE("zeta base cases and recursion consistency") {
    CHECK(zeta(0) == P::constant(1, P::Vars::AlphaBeta));
    CHECK(zeta(1) == P::monomial(1, 1, 0, P::Vars::AlphaBeta));

    // zeta_2 = alpha^2 + beta - 8 (the sign that reproduces the displayed
    // theta_4 and theta_5 below)
    P z2 = zeta(2);
    CHECK(z2.coeff(2, 0) == 1);
    CHECK(z2.coeff(0, 1) == 1);
    CHECK(z2.coeff(0, 0) == -8);
    CHECK(z2.terms().size() == 3);

    P alpha = P::monomial(1, 1, 0, P::Vars::AlphaBeta);
    P beta = P::monomial(1, 0, 1, P::Vars::AlphaBeta);
    for (int r = 1; r <= 40; ++r) {
        P lhs = zeta(r + 1);
        P factor = beta + P::constant(r % 2 == 0 ? 8 : -8, P::Vars::AlphaBeta);
        P rhs = alpha * zeta(r) + factor.scaled(Int(r) * r) * zeta(r - 1);
        CHECK(lhs == rhs);
    }

    for (int r = 0; r <= 60; ++r) {
        P z = zeta(r);
        for (const auto& [key, c] : z.terms()) CHECK((key.first - r) % 2 == 0);
    }
}

TEST_CASE("theta polynomials match the displayed values") {
    CHECK(theta_poly(0) == P::constant(1, P::Vars::AlphaEps));
    CHECK(theta_poly(1) == P::monomial(1, 1, 0, P::Vars::AlphaEps));

    P t4 = theta_poly(4);
    P want4(P::Vars::AlphaEps);
    want4.add_term(4, 0, 15);
    want4.add_term(2, 1, 160);
    want4.add_term(2, 0, -120);
    want4.add_term(0, 2, 360);
    want4.add_term(0, 1, -720);
    want4.add_term(0, 0, 360);
    CHECK(t4 == want4);

    P t5 = theta_poly(5);
    P want5(P::Vars::AlphaEps);
    want5.add_term(5, 0, 105);
    want5.add_term(3, 1, 1456);
    want5.add_term(3, 0, 840);
    want5.add_term(1, 2, 4984);
    want5.add_term(1, 1, 6160);
    want5.add_term(1, 0, 3192);
    CHECK(t5 == want5);
}

TEST_CASE("theta integrality and leading coefficient oddness for moderate r") {
    for (int r = 0; r <= 48; ++r) {
        P t = theta_poly(r);  // throws on non-integral coefficients
        CHECK(t.degree1() == r);
        CHECK(t.coeff(r, 0) % 2 != 0);
    }
}

TEST_CASE("mod 4 and mod 8 reductions at small r") {
    for (int r = 0; r <= 32; ++r) {
        auto m4 = check_theta_reduction(r, 2);
        CHECK(m4.integral);
        CHECK(m4.reduces_to_sign.has_value());
    }
    auto r4 = check_theta_reduction(4, 3);
    CHECK(r4.reduces_to_sign == -1);
    auto r5 = check_theta_reduction(5, 3);
    CHECK(r5.reduces_to_sign == 1);
    auto r6 = check_theta_reduction(6, 3);
    CHECK_FALSE(r6.reduces_to_sign.has_value());  // 6 = 2 mod 4

    for (int r = 0; r <= 33; ++r) {
        auto m8 = check_theta_reduction(r, 3);
        CHECK(m8.reduces_to_sign.has_value() == (r % 4 == 0 || r % 4 == 1));
    }
    CHECK_THROWS_AS(check_theta_reduction(4, 4), error);
}

TEST_CASE("beta-substitution family at small r") {
    // reduces to -beta^{r/2} throughout, except k=2 with r = 2 mod 4 where
    // the sign flips to +
    auto c22 = remark_family_check(2, 2);
    CHECK(c22.integral);
    CHECK(c22.reduces_to_sign == 1);
    CHECK(remark_family_check(4, 2).reduces_to_sign == -1);
    CHECK(remark_family_check(6, 2).reduces_to_sign == 1);
    CHECK(remark_family_check(4, 3).reduces_to_sign == -1);
    CHECK(remark_family_check(8, 4).reduces_to_sign == -1);
    CHECK(remark_family_check(16, 5).reduces_to_sign == -1);
    CHECK(remark_family_check(32, 6).reduces_to_sign == -1);

    CHECK_THROWS_AS(remark_family_check(0, 2), error);  // domain starts at 2^{k-1}
    CHECK_THROWS_AS(remark_family_check(6, 3), error);
    CHECK_THROWS_AS(remark_family_check(4, 7), error);
}

TEST_CASE("nilpotency table") {
    auto table = nilpotency_table(12);
    REQUIRE(table.size() == 12);
    CHECK(table[0].n_alpha2 == 1);
    CHECK(table[0].n_beta4 == 1);
    CHECK(table[0].n_beta8 == 1);
    for (const auto& row : table) {
        CHECK(row.n_alpha2 == row.g);
        CHECK(row.n_beta4 == (row.g + 1) / 2);
        if (row.g % 4 == 2) {
            CHECK_FALSE(row.n_beta8.has_value());
        } else {
            CHECK(row.n_beta8 == (row.g + 1) / 2);
            CHECK(row.beta8_by_sandwich == (row.g % 4 == 3));
        }
    }
    CHECK(table[10].g == 11);
    CHECK(table[10].n_beta8 == 6);
    CHECK(table[9].g == 10);
    CHECK_FALSE(table[9].n_beta8.has_value());
    CHECK_THROWS_AS(nilpotency_table(0), error);
    CHECK_THROWS_AS(nilpotency_table(200), error);
}
