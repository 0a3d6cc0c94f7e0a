#include "latkit/munoz.hpp"

#include <sstream>

namespace latkit {

BivariatePolynomial BivariatePolynomial::constant(const Int& c, Vars vars) {
    return monomial(c, 0, 0, vars);
}

BivariatePolynomial BivariatePolynomial::monomial(const Int& c, int e1, int e2, Vars vars) {
    BivariatePolynomial p(vars);
    p.add_term(e1, e2, c);
    return p;
}

Int BivariatePolynomial::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Int(0) : it->second;
}

int BivariatePolynomial::degree1() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

void BivariatePolynomial::add_term(int e1, int e2, const Int& c) {
    if (c == 0) return;
    Int& slot = terms_[{e1, e2}];
    slot += c;
    if (slot == 0) terms_.erase({e1, e2});
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable mismatch");
    BivariatePolynomial out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable mismatch");
    BivariatePolynomial out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable mismatch");
    BivariatePolynomial out(vars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::scaled(const Int& k) const {
    BivariatePolynomial out(vars_);
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c * k);
    return out;
}

BivariatePolynomial BivariatePolynomial::divided(const Int& k) const {
    BivariatePolynomial out(vars_);
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, exact_div(c, k));
    return out;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    const char* names[][2] = {{"a", "b"}, {"a", "e"}, {"b", "e"}};
    const char** nm = names[static_cast<int>(vars_)];
    std::ostringstream out;
    bool first = true;
    // highest exp1 first, matching how the polynomials are usually displayed
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0)
            out << "-";
        first = false;
        Int ac = abs(c);
        bool has_var = key.first > 0 || key.second > 0;
        if (ac != 1 || !has_var) out << ac.get_str();
        for (int slot = 0; slot < 2; ++slot) {
            int e = slot == 0 ? key.first : key.second;
            if (e == 0) continue;
            out << nm[slot];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

BivariatePolynomial zeta(int r) {
    if (r < 0) throw error("zeta: negative index");
    using P = BivariatePolynomial;
    const auto AB = P::Vars::AlphaBeta;
    P prev = P::constant(1, AB);  // zeta_0
    if (r == 0) return prev;
    P cur = P::monomial(1, 1, 0, AB);  // zeta_1 = alpha
    P alpha = cur;
    for (int i = 1; i < r; ++i) {
        // zeta_{i+1} = alpha zeta_i + i^2 (beta + (-1)^i 8) zeta_{i-1}
        P factor = P::monomial(1, 0, 1, AB) + P::constant(i % 2 == 0 ? 8 : -8, AB);
        P next = alpha * cur + factor.scaled(Int(i) * i) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    for (const auto& [key, c] : cur.terms())
        if ((key.first - r) % 2 != 0) throw error("zeta: alpha-degree parity broken");
    return cur;
}

BivariatePolynomial theta_poly(int r) {
    using P = BivariatePolynomial;
    P z = zeta(r);
    // beta = alpha^2 + 8 eps
    P sub = P::monomial(1, 2, 0, P::Vars::AlphaEps) + P::monomial(8, 0, 1, P::Vars::AlphaEps);
    P out(P::Vars::AlphaEps);
    for (const auto& [key, c] : z.terms()) {
        P term = P::monomial(c, key.first, 0, P::Vars::AlphaEps);
        for (int i = 0; i < key.second; ++i) term = term * sub;
        out = out + term;
    }
    out = out.scaled(double_factorial(2 * r - 3));
    try {
        return out.divided(factorial(r));
    } catch (const error&) {
        throw error("theta_poly: non-integral coefficients at r = " + std::to_string(r));
    }
}

namespace {

// All terms except (lead1, lead2) vanish mod `modulus`, and the leading
// coefficient is +-1 mod modulus: record the sign.
std::optional<int> reduces_to_signed_power(const BivariatePolynomial& p, int lead1, int lead2,
                                           const Int& modulus) {
    std::optional<int> sign;
    for (const auto& [key, c] : p.terms()) {
        Int residue = mod_pos(c, modulus);
        if (key.first == lead1 && key.second == lead2) {
            if (residue == 1)
                sign = 1;
            else if (residue == modulus - 1)
                sign = -1;
            else
                return std::nullopt;
        } else if (residue != 0) {
            return std::nullopt;
        }
    }
    return sign;
}

}  // namespace

ReductionCheckResult check_theta_reduction(int r, int k) {
    if (k != 2 && k != 3) throw error("check_theta_reduction: k must be 2 or 3");
    if (r < 0) throw error("check_theta_reduction: negative r");
    ReductionCheckResult res;
    res.r = r;
    res.modulus = pow_int(2, k);
    BivariatePolynomial t = theta_poly(r);  // throws if non-integral
    res.integral = true;
    res.reduces_to_sign = reduces_to_signed_power(t, r, 0, res.modulus);
    return res;
}

ReductionCheckResult remark_family_check(int r, int k) {
    if (k < 2 || k > 6) throw error("remark_family_check: k must be in 2..6");
    int period = 1 << (k - 1);
    if (r < period || r % period != 0)
        throw error("remark_family_check: r must be a positive multiple of 2^(k-1)");
    const int sigma = r % 2;

    using P = BivariatePolynomial;
    P z = zeta(r);
    // alpha^sigma * zeta_r has only even alpha powers; alpha^2 = beta - 8 eps
    P sub = P::monomial(1, 1, 0, P::Vars::BetaEps) + P::monomial(-8, 0, 1, P::Vars::BetaEps);
    P out(P::Vars::BetaEps);
    for (const auto& [key, c] : z.terms()) {
        int apow = key.first + sigma;
        if (apow % 2 != 0) throw error("remark_family_check: odd alpha power survives");
        P term = P::monomial(c, key.second, 0, P::Vars::BetaEps);
        for (int i = 0; i < apow / 2; ++i) term = term * sub;
        out = out + term;
    }
    out = out.scaled(double_factorial(2 * r - 3));

    ReductionCheckResult res;
    res.r = r;
    res.modulus = pow_int(2, k);
    out = out.divided(factorial(r));  // throws if non-integral
    res.integral = true;
    res.reduces_to_sign = reduces_to_signed_power(out, (r + sigma) / 2, 0, res.modulus);
    return res;
}

std::vector<NilpotencyRow> nilpotency_table(int g_max) {
    if (g_max < 1 || g_max > 128) throw error("nilpotency_table: g_max must be in 1..128");
    std::vector<NilpotencyRow> rows;
    for (int g = 1; g <= g_max; ++g) {
        NilpotencyRow row;
        row.g = g;
        row.n_alpha2 = g;
        row.n_beta4 = (g + 1) / 2;
        switch (g % 4) {
            case 0:
            case 1:
                row.n_beta8 = (g + 1) / 2;
                break;
            case 3:
                // N(g) <= N(g+1) = ceil((g+1)/2) = ceil(g/2), and monotonicity
                // from below pins the value
                row.n_beta8 = (g + 1) / 2;
                row.beta8_by_sandwich = true;
                break;
            case 2:
                break;  // open
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace latkit
