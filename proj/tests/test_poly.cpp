#include <doctest.h>

#include "pencil/poly.hpp"

using namespace pencil;

namespace {
Poly pv(Var v, unsigned e = 1) { return Poly::variable(v, e); }
const Var L = Var::Lambda;
const Var T = Var::T;
const Var V = Var::V;
const Var K = Var::K;
}  // namespace

TEST_CASE("grlex order: total degree first, then lambda-major lex") {
    Exp a{}, b{};
    a[0] = 1;            // lambda
    b[5] = 3;            // K^3
    CHECK(grlex_cmp(a, b) < 0);   // deg 1 < deg 3
    Exp c{}, d{};
    c[0] = 2;            // lambda^2
    d[0] = 1;
    d[1] = 1;            // lambda*t
    CHECK(grlex_cmp(c, d) > 0);   // same degree, lambda^2 lex-larger
    CHECK(grlex_cmp(c, c) == 0);
    CHECK((pv(L, 2) + pv(L) * pv(T)).leading_term().e == c);
}

TEST_CASE("poly string form round trips") {
    Poly p = Poly::constant(rat(2)) * pv(L, 2) * pv(T) - Poly::constant(rat(1, 3)) * pv(K) +
             Poly::constant(rat(4));
    CHECK(p.to_string() == "2*lambda^2*t - 1/3*K + 4");
    CHECK(Poly::parse(p.to_string()) == p);
    CHECK(Poly::parse("0") == Poly::zero());
    CHECK(Poly::zero().to_string() == "0");
    Poly q = (pv(L) - pv(T)) * (pv(L) + pv(T));
    CHECK(q.to_string() == "lambda^2 - t^2");
    CHECK(Poly::parse("lambda^2 - t^2") == q);
}

TEST_CASE("poly arithmetic and structural equality") {
    Poly p = pv(L) + pv(T);
    CHECK(p * p == pv(L, 2) + Poly::constant(rat(2)) * pv(L) * pv(T) + pv(T, 2));
    CHECK(p - p == Poly::zero());
    CHECK((p - p).is_zero());
    CHECK(p.pow(3) == p * p * p);
    CHECK(Poly::one().is_one());
    CHECK(Poly::constant(rat(7)).constant_value() == rat(7));
}

TEST_CASE("degrees and variable usage") {
    Poly p = pv(L, 2) * pv(T) + pv(K);
    CHECK(p.total_degree() == 3);
    CHECK(p.degree(L) == 2);
    CHECK(p.degree(T) == 1);
    CHECK(p.degree(V) == 0);
    CHECK(p.uses_var(K));
    CHECK(!p.uses_var(V));
    CHECK(Poly::zero().total_degree() == -1);
}

TEST_CASE("evaluation and partial substitution") {
    Poly p = Poly::constant(rat(2)) * pv(L, 2) * pv(T) - Poly::constant(rat(1, 3)) * pv(K) +
             Poly::constant(rat(4));
    std::array<Rational, kNumVars> pt{rat(1, 2), rat(3), rat(0), rat(0), rat(0), rat(6)};
    CHECK(p.eval(pt) == rat(7, 2));
    CHECK(p.subs(T, rat(3)) ==
          Poly::constant(rat(6)) * pv(L, 2) - Poly::constant(rat(1, 3)) * pv(K) +
              Poly::constant(rat(4)));
    CHECK(p.subs(K, rat(12)).subs(T, rat(3)).subs(L, rat(1, 2)) == Poly::constant(rat(3, 2)));
}

TEST_CASE("content and primitive part") {
    Poly p = Poly::constant(rat(2, 3)) * pv(L) - Poly::constant(rat(2, 3)) * pv(T);
    Poly prim = p.primitive_part();
    // primitive: coprime integer coefficients, positive leading coefficient
    CHECK(prim == pv(L) - pv(T));
    CHECK(p == Poly::constant(p.content_and_sign()) * prim);
    Poly neg = Poly::constant(rat(-2)) * pv(L);
    CHECK(neg.primitive_part() == pv(L));
    CHECK(neg == Poly::constant(neg.content_and_sign()) * neg.primitive_part());
    CHECK(Poly::zero().primitive_part().is_zero());
}

TEST_CASE("exact division and gcd") {
    Poly a = pv(L, 2) - pv(T, 2);
    Poly b = pv(L) - pv(T);
    CHECK(Poly::divexact(a, b) == pv(L) + pv(T));
    CHECK(!Poly::try_div(a, pv(L) + Poly::one()).has_value());
    CHECK_THROWS_AS(Poly::divexact(a, pv(K)), std::domain_error);
    Poly c = (pv(L) + pv(T)) * (pv(L) + pv(T));
    CHECK(Poly::gcd(a, c) == pv(L) + pv(T));
    // gcd is normalized: primitive with positive leading coefficient
    CHECK(Poly::gcd(Poly::constant(rat(-4)) * b, Poly::constant(rat(6)) * b) == b);
}

TEST_CASE("dense coefficient lists in one variable") {
    Poly p = pv(V, 2) * pv(T) + pv(V) * (pv(L) + Poly::one()) + pv(K);
    auto cs = p.coeffs_in(V);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == pv(K));
    CHECK(cs[1] == pv(L) + Poly::one());
    CHECK(cs[2] == pv(T));
    CHECK(Poly::from_coeffs(V, cs) == p);
}
