#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hamop {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

// fraction constructor; mpq_class(n, d) alone does not canonicalize
inline Rational rat(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rat_pow(const Rational& q, unsigned e) {
    Rational r(1);
    Rational base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// gcd on rationals: gcd of numerators over lcm of denominators.  Used for
// polynomial contents; gcd(a,b) divides both with integer quotients.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    if (gn == 0 && ld == 0) return Rational(0);
    Rational r(gn, ld == 0 ? mpz_class(1) : ld);
    r.canonicalize();
    return r;
}

// exact square root if q is a square of a rational
inline std::optional<Rational> rat_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace hamop
