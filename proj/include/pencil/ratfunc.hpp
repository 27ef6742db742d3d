#pragma once

#include "pencil/poly.hpp"

#include <stdexcept>
#include <string>

namespace pencil {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of Q(lambda, t, u, v, w, K), kept normalized: gcd(num, den) = 1, den is
// monic in the grlex sense (leading coefficient 1), and 0 is represented as 0/1.
// The representation is therefore canonical and equality is structural.
class RatFunc {
  public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::one()) {}
    RatFunc(long n) : RatFunc(Rational(n)) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational as_rational() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;

    // Substitution of one variable by a rational function (or constant); the result
    // is renormalized. Throws PoleError if the substituted denominator vanishes.
    RatFunc substitute(Var x, const RatFunc& value) const;

    // Full evaluation at a rational point; throws PoleError on a pole.
    Rational eval(const std::array<Rational, kNumVars>& point) const;

    std::string to_string() const;
    static RatFunc parse(const std::string& s);

  private:
    Poly num_, den_;
    void normalize();
};

// Uniform scalar-field interface so matrices and operators can run either fully
// symbolic (RatFunc) or on demoted rational samples (Rational).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return rat_is_zero(x); }
    static std::string str(const Rational& x) { return rat_to_string(x); }
};

template <>
struct FieldOps<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string str(const RatFunc& x) { return x.to_string(); }
};

// Polynomials form only a ring; this enables Mat<Poly> (fraction-free paths),
// which never instantiates the division-based routines.
template <>
struct FieldOps<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly::one(); }
    static bool is_zero(const Poly& x) { return x.is_zero(); }
    static std::string str(const Poly& x) { return x.to_string(); }
};

}  // namespace pencil
