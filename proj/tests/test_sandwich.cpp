#include <doctest.h>

#include "pencil/algebra.hpp"
#include "pencil/sandwich.hpp"

using namespace pencil;

namespace {
Mat<Rational> m33(std::initializer_list<long> v) {
    Mat<Rational> m(3, 3);
    int k = 0;
    for (long x : v) {
        m(k / 3, k % 3) = rat(x);
        ++k;
    }
    return m;
}
const Mat<Rational> A = m33({1, 2, 0, 0, 3, 1, 5, 0, 2});
const Mat<Rational> B = m33({2, 0, 1, 1, 1, 0, 0, 4, 3});
const Mat<Rational> X = m33({0, 1, 2, 3, 0, 1, 1, 1, 0});
}  // namespace

TEST_CASE("smat round trips and products match dense") {
    SMat<Rational> sa = SMat<Rational>::from_dense(A);
    SMat<Rational> sb = SMat<Rational>::from_dense(B);
    CHECK(sa.to_dense() == A);
    CHECK(sa.nnz() == A.count_nonzero());
    CHECK((sa * sb).to_dense() == A * B);
    CHECK((sa + sb).to_dense() == A + B);
    CHECK((sa - sb).to_dense() == A - B);
    CHECK(sa.transpose().to_dense() == A.transpose());
    CHECK(sa.scaled(rat(2)).to_dense() == A * rat(2));
    CHECK(SMat<Rational>::identity(3).to_dense() == Mat<Rational>::identity(3));
}

TEST_CASE("smat add_at cancels exactly") {
    SMat<Rational> s(2, 2);
    s.add_at(0, 1, rat(3));
    s.add_at(0, 1, rat(-3));
    CHECK(s.is_zero());
    s.add_at(1, 1, rat(0));
    CHECK(s.nnz() == 0);
}

TEST_CASE("sparse operator applies a x b") {
    SparseOp<Rational> op(3);
    op.add_pair(SMat<Rational>::from_dense(A), SMat<Rational>::from_dense(B), rat(1));
    CHECK(op.apply(X) == A * X * B);
    CHECK(op.apply(SMat<Rational>::from_dense(X)).to_dense() == A * X * B);
    CHECK(SparseOp<Rational>::identity(3).apply(X) == X);

    // lift acts on row-major vectorization
    Mat<Rational> l = op.lift();
    auto vx = vec_of(X);
    std::vector<Rational> out(9, rat(0));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) out[i] += l(i, j) * vx[j];
    CHECK(mat_of(out, 3, 3) == A * X * B);
}

TEST_CASE("operator sums and scalars") {
    SparseOp<Rational> op(3);
    op.add_pair(SMat<Rational>::from_dense(A), SMat<Rational>::identity(3), rat(1));
    op.add_scalar(rat(-2));
    CHECK(op.apply(X) == A * X - X * rat(2));
    SparseOp<Rational> half = op.scaled(rat(1, 2));
    CHECK(half.apply(X) == (A * X - X * rat(2)) * rat(1, 2));
    SparseOp<Rational> sum(3);
    sum.add_scaled(op, rat(1));
    sum.add_scaled(op, rat(-1));
    CHECK(sum.is_zero());
}

TEST_CASE("compose applies the right factor first") {
    SparseOp<Rational> p(3), q(3);
    p.add_pair(SMat<Rational>::from_dense(A), SMat<Rational>::identity(3), rat(1));  // x -> Ax
    q.add_pair(SMat<Rational>::identity(3), SMat<Rational>::from_dense(B), rat(1));  // x -> xB
    CHECK(compose(p, q).apply(X) == p.apply(q.apply(X)));
    CHECK(compose(p, q).apply(X) == A * X * B);
    SparseOp<Rational> pq = compose(p, p);
    CHECK(pq.apply(X) == A * (A * X));
}

TEST_CASE("horner evaluation agrees with direct application") {
    SparseOp<Rational> op(3);
    op.add_pair(SMat<Rational>::from_dense(A), SMat<Rational>::from_dense(B), rat(1, 2));
    UPoly<Rational> q{rat(3), rat(-1), rat(2), rat(1)};
    Mat<Rational> direct = X * rat(3) - op.apply(X) + op.apply(op.apply(X)) * rat(2) +
                           op.apply(op.apply(op.apply(X)));
    CHECK(horner_eval_op(q, op).apply(X) == direct);
    CHECK(op_poly_apply(q, op, X) == direct);
}

TEST_CASE("right normal form reproduces the operator") {
    SparseOp<Rational> op(3);
    op.add_pair(SMat<Rational>::from_dense(A), SMat<Rational>::from_dense(B), rat(2));
    op.add_pair(SMat<Rational>::from_dense(B), SMat<Rational>::identity(3), rat(-1));
    auto rnf = right_normal_form(op);
    Mat<Rational> acc(3, 3);
    for (const auto& [kl, am] : rnf) {
        Mat<Rational> unit(3, 3);
        unit(kl.first, kl.second) = rat(1);
        acc += am.to_dense() * X * unit;
    }
    CHECK(acc == op.apply(X));
}

TEST_CASE("tensor accumulators detect exact cancellation only") {
    SMat<Rational> sa = SMat<Rational>::from_dense(A);
    SMat<Rational> sb = SMat<Rational>::from_dense(B);
    SMat<Rational> sx = SMat<Rational>::from_dense(X);

    Tensor2Acc<Rational> t2;
    t2.add(sa, sb, rat(1));
    t2.add(sa, sb, rat(-1));
    CHECK(t2.is_zero());
    t2.add(sa, sb + sx, rat(1));
    t2.add(sa, sb, rat(-1));
    t2.add(sa, sx, rat(-1));
    CHECK(t2.is_zero());
    t2.add(sa, sb, rat(1, 7));
    CHECK(!t2.is_zero());
    CHECK(!t2.witness().empty());

    Tensor3Acc<Rational> t3;
    t3.add(sa, sb, sx, rat(1));
    t3.add(sa, sb, sx, rat(-1));
    CHECK(t3.is_zero());
    t3.add(sa, sb + sx, sx, rat(2));
    t3.add(sa, sb, sx, rat(-2));
    t3.add(sa, sx, sx, rat(-2));
    CHECK(t3.is_zero());
    t3.add(sa, sx, sb, rat(1));
    CHECK(!t3.is_zero());
    CHECK(!t3.witness().empty());

    Tensor4Acc<Rational> t4;
    t4.add(sa, sb, sx, sa, rat(1));
    t4.add(sa, sb, sx, sa, rat(-1));
    CHECK(t4.is_zero());
    t4.add(sa, sb, sx + sb, sa, rat(1));
    t4.add(sa, sb, sx, sa, rat(-1));
    t4.add(sa, sb, sb, sa, rat(-1));
    CHECK(t4.is_zero());
    CHECK(!t4.witness().has_value());
    t4.add(sb, sb, sb, sb, rat(1));
    CHECK(!t4.is_zero());
    CHECK(t4.witness().has_value());
}
