#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latkit {

using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(x.get_num(), x.get_den());
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// Nearest integer, ties toward negative infinity.
inline Int round_rat(const Rat& x) {
    return floor_rat(x + Rat(1, 2));
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw error("exact_div: division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw error("exact_div: remainder nonzero");
    return q;
}

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// k!! with the convention k!! = 1 for k < 0.
inline Int double_factorial(long k) {
    if (k < 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Canonical nonnegative residue.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace latkit
