#include <doctest.h>

#include "pencil/ratfunc.hpp"

using namespace pencil;

namespace {
RatFunc rv(Var v) { return RatFunc::variable(v); }
const Var L = Var::Lambda;
const Var T = Var::T;
const Var U = Var::U;
const Var V = Var::V;
}  // namespace

TEST_CASE("ratfunc normalization: reduced, monic denominator") {
    Poly num = Poly::constant(rat(2)) * Poly::variable(L) - Poly::constant(rat(2)) * Poly::variable(T);
    Poly den = Poly::constant(rat(4)) * Poly::variable(L) - Poly::constant(rat(4)) * Poly::variable(T);
    RatFunc f(num, den);
    CHECK(f == RatFunc(rat(1, 2)));
    CHECK(f.den().is_one());
    // denominator leading coefficient is normalized to 1 (grlex-leading)
    RatFunc g = RatFunc(Rational(1)) / (rv(T) - rv(L));  // leading term is -lambda
    CHECK(g.den() == Poly::variable(L) - Poly::variable(T));
    CHECK(g.num() == Poly::constant(rat(-1)));
    CHECK(RatFunc().is_zero());
    CHECK(RatFunc().den().is_one());
}

TEST_CASE("ratfunc arithmetic and cancellation") {
    RatFunc f = (rv(L) * rv(L) - rv(T) * rv(T)) / (rv(L) - rv(T));
    CHECK(f == rv(L) + rv(T));
    CHECK(f.is_polynomial());
    RatFunc a = RatFunc(Rational(1)) / rv(U), b = RatFunc(Rational(1)) / rv(V);
    CHECK(a + b == (rv(U) + rv(V)) / (rv(U) * rv(V)));
    CHECK(a - a == RatFunc());
    CHECK(a * rv(U) == RatFunc(Rational(1)));
    CHECK((a / b) == rv(V) / rv(U));
    CHECK(-a == RatFunc(Rational(-1)) / rv(U));
}

TEST_CASE("ratfunc inverse") {
    RatFunc f = (rv(U) - rv(V)) / (rv(U) + rv(V));
    CHECK(f * f.inverse() == RatFunc(Rational(1)));
    CHECK_THROWS(RatFunc().inverse());
}

TEST_CASE("substitution is simultaneous in num and den") {
    RatFunc f = RatFunc(Rational(1)) / (rv(U) - rv(V));
    CHECK(f.substitute(U, rv(V) + RatFunc(Rational(1))) == RatFunc(Rational(1)));
    // self-referential substitution v -> 1/v
    RatFunc g = rv(V) * rv(V);
    CHECK(g.substitute(V, RatFunc(Rational(1)) / rv(V)) ==
          RatFunc(Rational(1)) / (rv(V) * rv(V)));
    RatFunc h = (rv(V) + RatFunc(Rational(1)));
    CHECK(h.substitute(V, RatFunc(Rational(1)) / rv(V)) ==
          (rv(V) + RatFunc(Rational(1))) / rv(V));
}

TEST_CASE("substitution at a pole throws") {
    RatFunc f = RatFunc(Rational(1)) / (rv(L) - rv(T));
    CHECK_THROWS_AS(f.substitute(L, rv(T)), PoleError);
    std::array<Rational, kNumVars> pt{rat(3), rat(3), rat(0), rat(0), rat(0), rat(0)};
    CHECK_THROWS_AS(f.eval(pt), PoleError);
    pt[1] = rat(5);
    CHECK(f.eval(pt) == rat(-1, 2));
}

TEST_CASE("ratfunc string form round trips") {
    RatFunc f = RatFunc(Rational(-1)) / (rv(T) * rv(T) - RatFunc(Rational(1)));
    CHECK(f.to_string() == "(-1) / (t^2 - 1)");
    CHECK(RatFunc::parse(f.to_string()) == f);
    RatFunc g = rv(L) + RatFunc(Rational(1, 3));
    CHECK(RatFunc::parse(g.to_string()) == g);
}

TEST_CASE("constants and predicates") {
    CHECK(RatFunc(Rational(1)).is_one());
    CHECK(RatFunc(5).as_rational() == rat(5));
    CHECK(RatFunc(rat(2, 3)).is_constant());
    CHECK(!rv(L).is_constant());
    CHECK(FieldOps<RatFunc>::one() == RatFunc(Rational(1)));
    CHECK(FieldOps<RatFunc>::is_zero(RatFunc()));
}
