#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pencil {

// Exact rational scalar, GMP-backed. Values are kept canonical: gcd(num, den) = 1
// and den > 0 (mpq_class maintains this as long as every entry point canonicalizes).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (decimal digits only). Canonicalizes the result.
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

// gcd over Q used for polynomial contents: gcd(a, b) = gcd(numerators) / lcm(denominators),
// a positive value c such that a/c and b/c are coprime integers (0 if both inputs are 0).
inline Rational rat_content_gcd(const Rational& a, const Rational& b) {
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    if (sgn(l) == 0) return Rational(0);
    Rational q(g, l);
    q.canonicalize();
    return q;
}

}  // namespace pencil
