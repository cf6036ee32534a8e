#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace k3lat {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Nearest integer, ties rounded up.
inline Integer round_nearest(const Rational& q) {
    return floor(q + Rational(1, 2));
}

inline Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Integer& d, const Integer& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Euclidean residue in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct ExtendedGcd {
    Integer g, s, t;  // s*a + t*b = g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    ExtendedGcd e;
    mpz_gcdext(e.g.get_mpz_t(), e.s.get_mpz_t(), e.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return e;
}

inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline std::string to_string(const Integer& a) { return a.get_str(); }

// Lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::optional<std::int64_t> to_int64(const Integer& a) {
    if (!a.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(a.get_si());
}

}  // namespace k3lat
