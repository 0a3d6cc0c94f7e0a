#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/numeric.hpp"

namespace latkit {

// Exact bivariate polynomial with big-integer coefficients. The variable pair
// is a tag carried along for printing; arithmetic only combines matching
// pairs.
class BivariatePolynomial {
public:
    enum class Vars { AlphaBeta, AlphaEps, BetaEps };

    using Key = std::pair<int, int>;  // (exp1, exp2)

    explicit BivariatePolynomial(Vars vars = Vars::AlphaBeta) : vars_(vars) {}

    static BivariatePolynomial constant(const Int& c, Vars vars);
    static BivariatePolynomial monomial(const Int& c, int e1, int e2, Vars vars);

    Vars vars() const { return vars_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int e1, int e2) const;
    int degree1() const;  // max exp1, -1 for zero

    void add_term(int e1, int e2, const Int& c);  // drops cancellations

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial scaled(const Int& k) const;
    // Divides every coefficient; throws if any is not divisible.
    BivariatePolynomial divided(const Int& k) const;

    bool operator==(const BivariatePolynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    Vars vars_;
    std::map<Key, Int> terms_;
};

// zeta_0 = 1, zeta_1 = alpha, zeta_{r+1} = alpha zeta_r + r^2 (beta + (-1)^r 8) zeta_{r-1},
// in Z[alpha, beta]. Every monomial's alpha-exponent is congruent to r mod 2
// (asserted).
BivariatePolynomial zeta(int r);

// theta_r(alpha, eps) = (2r-3)!!/r! * zeta_r |_{beta = alpha^2 + 8 eps}, in
// Z[alpha, eps]. Throws if the division by r! is not exact.
BivariatePolynomial theta_poly(int r);

struct ReductionCheckResult {
    int r = 0;
    Int modulus{0};
    bool integral = false;
    // +1 or -1 when the polynomial reduces to (sign) * (leading power) mod
    // modulus; nullopt otherwise.
    std::optional<int> reduces_to_sign;
};

// Does theta_r reduce to +-alpha^r mod 2^k? k in {2, 3}.
ReductionCheckResult check_theta_reduction(int r, int k);

// The beta-substitution family: (2r-3)!! alpha^sigma zeta_r / r! with
// alpha^2 = beta - 8 eps eliminated; expected to reduce to -beta^{(r+sigma)/2}
// mod 2^k for r = 0 mod 2^{k-1}, k in {2..6}. sigma = r mod 2.
ReductionCheckResult remark_family_check(int r, int k);

struct NilpotencyRow {
    int g = 0;
    int n_alpha2 = 0;
    int n_beta4 = 0;
    std::optional<int> n_beta8;  // unset for g = 2 mod 4 (open in general)
    bool beta8_by_sandwich = false;
};

// Nilpotency degrees N_{alpha^2}(g) = g, N_{beta^4}(g) = ceil(g/2), and
// N_{beta^8}(g) = ceil(g/2) where determined (directly for g != 2 mod 4 with
// g = 0,1 mod 4, by monotonicity sandwich for g = 3 mod 4).
std::vector<NilpotencyRow> nilpotency_table(int g_max);

}  // namespace latkit
