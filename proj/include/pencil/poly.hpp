#pragma once

#include "pencil/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pencil {

// The scalar field everywhere is Q(lambda, t, u, v, w, K): a fixed, ordered list of
// named indeterminates. lambda/t are structure parameters, u/v/w spectral parameters,
// K the central element adjoined as a formal variable.
inline constexpr int kNumVars = 6;

enum class Var : int { Lambda = 0, T = 1, U = 2, V = 3, W = 4, K = 5 };

inline const char* var_name(Var v) {
    static const char* names[kNumVars] = {"lambda", "t", "u", "v", "w", "K"};
    return names[static_cast<int>(v)];
}

using Exp = std::array<std::uint16_t, kNumVars>;

// Graded lexicographic order: compare total degree first, ties broken
// lexicographically with lambda highest.
int grlex_cmp(const Exp& a, const Exp& b);

// Multivariate polynomial over Q. Terms are kept sorted grlex-descending with no
// zero coefficients, so representation is canonical and equality is structural.
class Poly {
  public:
    struct Term {
        Exp e;
        Rational c;
        friend bool operator==(const Term& a, const Term& b) {
            return a.e == b.e && a.c == b.c;
        }
    };

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly constant(const Rational& c);
    static Poly variable(Var v, unsigned exp = 1);
    static Poly monomial(const Exp& e, const Rational& c);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Requires is_constant().
    Rational constant_value() const;

    bool uses_var(Var v) const;
    int degree(Var v) const;   // -1 for the zero polynomial
    int total_degree() const;  // -1 for the zero polynomial

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned n) const;

    // Leading data in the global grlex order.
    const Term& leading_term() const;

    // Dense coefficient list in one variable: result[d] has no occurrence of x.
    std::vector<Poly> coeffs_in(Var x) const;
    static Poly from_coeffs(Var x, const std::vector<Poly>& cs);

    // Full evaluation; every variable present must have a value.
    Rational eval(const std::array<Rational, kNumVars>& point) const;
    // Partial substitution of one variable by a rational constant.
    Poly subs(Var x, const Rational& val) const;

    // content() is the positive rational c with *this == c * primitive_part(),
    // where the primitive part has coprime integer coefficients and positive
    // leading coefficient. content of 0 is 0.
    Rational content_and_sign() const;
    Poly primitive_part() const;

    // Exact division; throws std::domain_error if b does not divide *this.
    static Poly divexact(const Poly& a, const Poly& b);
    static std::optional<Poly> try_div(const Poly& a, const Poly& b);

    // gcd up to the canonical unit normalization (primitive, positive leading coeff).
    static Poly gcd(const Poly& a, const Poly& b);

    // Canonical text form, e.g. "2*lambda^2*t - 1/3*K + 4"; parse() round-trips it.
    std::string to_string() const;
    static Poly parse(const std::string& s);

  private:
    std::vector<Term> t_;
    void normalize();
};

inline Poly operator*(const Poly& a, Var v) { return a * Poly::variable(v); }

}  // namespace pencil
