#include <doctest.h>

#include "pencil/matrix.hpp"

using namespace pencil;

namespace {
Mat<Rational> m22(long a, long b, long c, long d) {
    Mat<Rational> m(2, 2);
    m(0, 0) = rat(a);
    m(0, 1) = rat(b);
    m(1, 0) = rat(c);
    m(1, 1) = rat(d);
    return m;
}
}  // namespace

TEST_CASE("matrix product, transpose, trace") {
    Mat<Rational> a = m22(1, 2, 3, 4), b = m22(0, 1, 1, 0);
    CHECK(a * b == m22(2, 1, 4, 3));
    CHECK(b * a == m22(3, 4, 1, 2));
    CHECK(a.transpose() == m22(1, 3, 2, 4));
    CHECK(a.trace() == rat(5));
    CHECK(Mat<Rational>::identity(2) * a == a);
    CHECK((a - a).is_zero());
    CHECK(a * rat(2) == m22(2, 4, 6, 8));
    CHECK(a.count_nonzero() == 4);
}

TEST_CASE("kron is row-major") {
    Mat<Rational> e12(2, 2);
    e12(0, 1) = rat(1);
    Mat<Rational> k = kron(e12, Mat<Rational>::identity(2));
    // (a x b)[(i1*2+i2),(j1*2+j2)] = a(i1,j1) b(i2,j2)
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == rat(1));
    CHECK(k(1, 3) == rat(1));
    CHECK(k.count_nonzero() == 2);
}

TEST_CASE("rref, rank, deterministic pivots") {
    Mat<Rational> m(3, 3);
    m(0, 0) = rat(1);
    m(0, 1) = rat(2);
    m(0, 2) = rat(3);
    m(1, 0) = rat(2);
    m(1, 1) = rat(4);
    m(1, 2) = rat(6);
    m(2, 0) = rat(1);
    m(2, 1) = rat(0);
    m(2, 2) = rat(1);
    CHECK(rank(m) == 2);
    auto piv = rref(m);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(rank(Mat<Rational>::identity(4)) == 4);
}

TEST_CASE("solve_linear: particular solution and kernel") {
    Mat<Rational> a(1, 2);
    a(0, 0) = rat(1);
    a(0, 1) = rat(1);
    auto sol = solve_linear(a, {rat(2)});
    REQUIRE(sol.solution.has_value());
    CHECK((*sol.solution)[0] == rat(2));
    CHECK((*sol.solution)[1] == rat(0));
    REQUIRE(sol.kernel_basis.size() == 1);
    CHECK(sol.kernel_basis[0][0] == rat(-1));
    CHECK(sol.kernel_basis[0][1] == rat(1));

    Mat<Rational> b(2, 1);
    b(0, 0) = rat(1);
    b(1, 0) = rat(1);
    auto bad = solve_linear(b, {rat(1), rat(2)});
    CHECK(!bad.solution.has_value());
    CHECK(bad.kernel_basis.empty());
}

TEST_CASE("inverse and determinant") {
    Mat<Rational> a = m22(1, 2, 3, 4);
    Mat<Rational> inv = inverse(a);
    CHECK(inv(0, 0) == rat(-2));
    CHECK(inv(0, 1) == rat(1));
    CHECK(inv(1, 0) == rat(3, 2));
    CHECK(inv(1, 1) == rat(-1, 2));
    CHECK(a * inv == Mat<Rational>::identity(2));
    CHECK(det(a) == rat(-2));
    CHECK(!try_inverse(m22(1, 2, 2, 4)).has_value());
    CHECK_THROWS_AS(inverse(m22(1, 2, 2, 4)), SingularError);
    CHECK(det(m22(1, 2, 2, 4)) == rat(0));
}

TEST_CASE("fraction-free and cleared determinants") {
    Mat<Poly> m(2, 2);
    m(0, 0) = Poly::variable(Var::Lambda);
    m(0, 1) = Poly::variable(Var::T);
    m(1, 0) = Poly::variable(Var::T);
    m(1, 1) = Poly::variable(Var::Lambda);
    CHECK(det_bareiss(m) ==
          Poly::variable(Var::Lambda, 2) - Poly::variable(Var::T, 2));

    Mat<RatFunc> r(2, 2);
    r(0, 0) = RatFunc(Rational(1)) / RatFunc::variable(Var::Lambda);
    r(1, 1) = RatFunc(Rational(1)) / RatFunc::variable(Var::T);
    CHECK(det_ratfunc(r) ==
          RatFunc(Rational(1)) /
              (RatFunc::variable(Var::Lambda) * RatFunc::variable(Var::T)));
    CHECK(det_ratfunc(Mat<RatFunc>::identity(3)) == RatFunc(Rational(1)));
}

TEST_CASE("vec_of / mat_of round trip, row-major") {
    Mat<Rational> a = m22(1, 2, 3, 4);
    auto v = vec_of(a);
    REQUIRE(v.size() == 4);
    CHECK(v[0 * 2 + 1] == rat(2));
    CHECK(v[1 * 2 + 0] == rat(3));
    CHECK(mat_of(v, 2, 2) == a);
}

TEST_CASE("upoly division, gcd, lcm") {
    using P = UPoly<Rational>;
    P a{rat(-1), rat(0), rat(1)};   // x^2 - 1
    P b{rat(1), rat(-2), rat(1)};   // (x-1)^2
    CHECK(upoly::gcd(a, b) == P{rat(-1), rat(1)});
    auto [q, r] = upoly::divmod(a, P{rat(-1), rat(1)});
    CHECK(q == P{rat(1), rat(1)});
    CHECK(r.empty());
    P l = upoly::lcm(a, b);
    CHECK(upoly::deg(l) == 3);
    auto [q2, r2] = upoly::divmod(l, a);
    CHECK(r2.empty());
    (void)q2;
    CHECK(upoly::to_string(P{rat(2), rat(0), rat(1)}) == "(1)*x^2 + (2)");
}

TEST_CASE("minimal polynomial, certified") {
    Mat<Rational> d(2, 2);
    d(0, 0) = rat(1);
    d(1, 1) = rat(2);
    CHECK(minimal_polynomial(d) == UPoly<Rational>{rat(2), rat(-3), rat(1)});
    Mat<Rational> nil(2, 2);
    nil(0, 1) = rat(1);
    CHECK(minimal_polynomial(nil) == UPoly<Rational>{rat(0), rat(0), rat(1)});
    CHECK(minimal_polynomial(Mat<Rational>::identity(3)) ==
          UPoly<Rational>{rat(-1), rat(1)});
    CHECK(upoly_eval_mat(UPoly<Rational>{rat(2), rat(-3), rat(1)}, d).is_zero());
}
