#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pencil/matrix.hpp"
#include "pencil/ratfunc.hpp"
#include "pencil/sample.hpp"
#include "pencil/sandwich.hpp"

// Identity layer on top of the sandwich-operator engine:
//   * the derived product   x∘y = R(x)y + xR(y) − R(xy)   and its pencil
//     associativity, decomposed per power of the pencil parameter,
//   * multiplicativity      R(x)R(y) = R(x∘y),
//   * operator polynomials  q(R) = 0   tested by action on matrix units,
//   * resolvents            (v+R)^{-1} = q_v(R)  built from an annihilating
//     polynomial and verified by composition.
//
// All zero tests reduce finite sums of simple tensors A⊗B⊗…; expanding all
// but one slot over matrix units and accumulating the remaining slot gives an
// exact (basis-free) vanishing criterion.

namespace pencil {

// Right-unit normal form: op(x) = sum_kl A_kl x E_kl, the transpose pairing of
// the stored left-unit form op(x) = sum_ij E_ij x B_ij.
template <typename F>
std::map<std::pair<int, int>, SMat<F>> right_normal_form(const SparseOp<F>& op) {
    std::map<std::pair<int, int>, SMat<F>> out;
    for (const auto& [ij, B] : op.blocks) {
        for (const auto& [kl, v] : B.e) {
            auto it = out.find(kl);
            if (it == out.end())
                it = out.emplace(kl, SMat<F>(op.n, op.n)).first;
            it->second.add_at(ij.first, ij.second, v);
        }
    }
    return out;
}

// Accumulator for sums of 4-slot terms  A x B y C z D : slots A, B, D are
// expanded over matrix units, slot C is accumulated per unit triple.  The sum
// vanishes as a trilinear map iff every accumulated C is zero.
template <typename F>
struct Tensor4Acc {
    std::map<std::array<int, 6>, SMat<F>> acc;

    void add(const SMat<F>& A, const SMat<F>& B, const SMat<F>& C, const SMat<F>& D,
             const F& coeff) {
        if (FieldOps<F>::is_zero(coeff) || A.is_zero() || B.is_zero() || C.is_zero() ||
            D.is_zero())
            return;
        for (const auto& [ija, va] : A.e) {
            for (const auto& [ijb, vb] : B.e) {
                F vab = coeff * va * vb;
                for (const auto& [ijd, vd] : D.e) {
                    std::array<int, 6> key{ija.first, ija.second, ijb.first,
                                           ijb.second, ijd.first, ijd.second};
                    F w = vab * vd;
                    auto it = acc.find(key);
                    if (it == acc.end()) {
                        SMat<F> nc = C.scaled(w);
                        if (!nc.is_zero())
                            acc.emplace(key, std::move(nc));
                    } else {
                        it->second.add_scaled(C, w);
                        if (it->second.is_zero())
                            acc.erase(it);
                    }
                }
            }
        }
    }

    bool is_zero() const { return acc.empty(); }

    std::optional<std::array<int, 6>> witness() const {
        if (acc.empty())
            return std::nullopt;
        return acc.begin()->first;
    }
};

// One bilinear summand  L x M y N  of a product on matrix space.
template <typename F>
struct Tri {
    SMat<F> L, M, N;
    F c;
};

// The derived product as a term list:  x∘y = R(x)y + xR(y) − R(xy)
// expands over the blocks (E_p, B_p) of R into
//   (E_p, B_p, Id), (Id, E_p, B_p), −(E_p, Id, B_p).
template <typename F>
std::vector<Tri<F>> circ_terms(const SparseOp<F>& R) {
    std::vector<Tri<F>> out;
    SMat<F> id = SMat<F>::identity(R.n);
    F one = FieldOps<F>::one();
    F neg = FieldOps<F>::zero() - one;
    out.reserve(3 * R.blocks.size());
    for (const auto& [ij, B] : R.blocks) {
        SMat<F> E = SMat<F>::unit(R.n, R.n, ij.first, ij.second, one);
        out.push_back({E, B, id, one});
        out.push_back({id, E, B, one});
        out.push_back({E, id, B, neg});
    }
    return out;
}

// Direct evaluation of the derived product on concrete matrices.
template <typename F>
Mat<F> circ_apply(const SparseOp<F>& R, const Mat<F>& x, const Mat<F>& y) {
    return R.apply(x) * y + x * R.apply(y) - R.apply(x * y);
}

// First-order pencil layer: (x∘y)z + (xy)∘z − x∘(yz) − x(y∘z) = 0 as a
// trilinear map.  Linear in the term list of ∘.
template <typename F>
bool check_pencil_mixed(const SparseOp<F>& R) {
    int n = R.n;
    SMat<F> id = SMat<F>::identity(n);
    F one = FieldOps<F>::one();
    F neg = FieldOps<F>::zero() - one;
    Tensor4Acc<F> acc;
    for (const auto& t : circ_terms(R)) {
        acc.add(t.L, t.M, t.N, id, t.c);              // (x∘y)z
        acc.add(t.L, id, t.M, t.N, t.c);              // (xy)∘z
        acc.add(t.L, t.M, id, t.N, neg * t.c);        // x∘(yz)
        acc.add(id, t.L, t.M, t.N, neg * t.c);        // x(y∘z)
    }
    return acc.is_zero();
}

// Second-order pencil layer, multiplicative form:
//   Φ(x,y) = R(x)R(y) − R(x∘y) = R(x)R(y) − R(R(x)y) − R(xR(y)) + R²(xy) = 0.
template <typename F>
bool check_circ_multiplicative(const SparseOp<F>& R) {
    int n = R.n;
    F one = FieldOps<F>::one();
    F neg = FieldOps<F>::zero() - one;
    auto rnf = right_normal_form(R);
    SparseOp<F> R2 = compose(R, R);
    Tensor3Acc<F> acc;
    for (const auto& [pq, Bp] : R.blocks) {
        SMat<F> Ep = SMat<F>::unit(n, n, pq.first, pq.second, one);
        for (const auto& [kl, Bq] : R.blocks) {
            // R(x)R(y): E_p x (B_p E_q) y B_q
            SMat<F> Eq = SMat<F>::unit(n, n, kl.first, kl.second, one);
            SMat<F> mid = Bp * Eq;
            if (!mid.is_zero())
                acc.add(Ep, mid, Bq, one);
            // R(R(x)y): (E_q E_p) x B_p y B_q, nonzero only when q's column
            // matches p's row.
            if (kl.second == pq.first) {
                SMat<F> Eqp = SMat<F>::unit(n, n, kl.first, pq.second, one);
                acc.add(Eqp, Bp, Bq, neg);
            }
        }
        // R(xR(y)): E_q x A_m y (E_m B_q) over the right-unit form of R.
        for (const auto& [m, Am] : rnf) {
            SMat<F> Em = SMat<F>::unit(n, n, m.first, m.second, one);
            SMat<F> tail = Em * Bp;
            if (!tail.is_zero())
                acc.add(Ep, Am, tail, neg);
        }
    }
    // R²(xy): E_s x Id y B_s.
    SMat<F> id = SMat<F>::identity(n);
    for (const auto& [s, Bs] : R2.blocks) {
        SMat<F> Es = SMat<F>::unit(n, n, s.first, s.second, one);
        acc.add(Es, id, Bs, one);
    }
    return acc.is_zero();
}

// Second-order pencil layer, direct form: (x∘y)∘z − x∘(y∘z) = 0 as a 4-slot
// tensor.  Quadratic in the term list; intended for small/medium dimensions.
template <typename F>
bool check_circ_assoc_direct(const SparseOp<F>& R) {
    auto terms = circ_terms(R);
    F neg = FieldOps<F>::zero() - FieldOps<F>::one();
    Tensor4Acc<F> acc;
    for (const auto& q : terms) {
        for (const auto& p : terms) {
            F c = p.c * q.c;
            // (x∘y)∘z: (L_q L_p) x M_p y (N_p M_q) z N_q
            SMat<F> A1 = q.L * p.L;
            if (!A1.is_zero()) {
                SMat<F> C1 = p.N * q.M;
                if (!C1.is_zero())
                    acc.add(A1, p.M, C1, q.N, c);
            }
            // x∘(y∘z): L_q x (M_q L_p) y M_p z (N_p N_q)
            SMat<F> B2 = q.M * p.L;
            if (!B2.is_zero()) {
                SMat<F> D2 = p.N * q.N;
                if (!D2.is_zero())
                    acc.add(q.L, B2, p.M, D2, neg * c);
            }
        }
    }
    return acc.is_zero();
}

// Associator of the derived product on concrete matrices.
template <typename F>
Mat<F> circ_assoc_residual(const SparseOp<F>& R, const Mat<F>& x, const Mat<F>& y,
                           const Mat<F>& z) {
    return circ_apply(R, circ_apply(R, x, y), z) - circ_apply(R, x, circ_apply(R, y, z));
}

// First-order pencil layer on concrete matrices, sharing operator applications
// across the four products: (x∘y)z + (xy)∘z − x∘(yz) − x(y∘z).
template <typename F>
Mat<F> pencil_mixed_residual(const SparseOp<F>& R, const Mat<F>& x, const Mat<F>& y,
                             const Mat<F>& z) {
    Mat<F> rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
    Mat<F> xy = x * y, yz = y * z;
    Mat<F> rxy = R.apply(xy), ryz = R.apply(yz), rxyz = R.apply(x * yz);
    Mat<F> cxy = rx * y + x * ry - rxy;                 // x∘y
    Mat<F> cyz = ry * z + y * rz - ryz;                 // y∘z
    Mat<F> cxy_z = rxy * z + xy * rz - rxyz;            // (xy)∘z
    Mat<F> x_cyz = rx * yz + x * ryz - rxyz;            // x∘(yz)
    return cxy * z + cxy_z - x_cyz - x * cyz;
}

// The associator of ∘ collapses to the multiplicativity defect
//   Φ(x,y) = R(x)R(y) − R(x∘y):
//   (x∘y)∘z − x∘(y∘z) = xΦ(y,z) − Φ(x,y)z + Φ(x,yz) − Φ(xy,z)
//                        − R((x∘y)z + (xy)∘z − x∘(yz) − x(y∘z)),
// an identity for any linear R.  Once the first-order pencil layer vanishes,
// the trailing R(...) term drops and Φ ≡ 0 forces associativity of ∘.
template <typename F>
Mat<F> circ_bridge_residual(const SparseOp<F>& R, const Mat<F>& x, const Mat<F>& y,
                            const Mat<F>& z) {
    auto phi = [&](const Mat<F>& a, const Mat<F>& b) {
        return R.apply(a) * R.apply(b) - R.apply(circ_apply(R, a, b));
    };
    Mat<F> lhs = circ_assoc_residual(R, x, y, z);
    Mat<F> rhs = x * phi(y, z) - phi(x, y) * z + phi(x, y * z) - phi(x * y, z);
    return lhs - rhs;
}

// q(op) applied to a single matrix, by Horner's rule on operator application.
template <typename F>
Mat<F> op_poly_apply(const std::vector<F>& q, const SparseOp<F>& op, const Mat<F>& x) {
    if (q.empty())
        return Mat<F>(x.rows(), x.cols());
    Mat<F> r = x * q.back();
    for (int i = static_cast<int>(q.size()) - 2; i >= 0; --i)
        r = op.apply(r) + x * q[static_cast<size_t>(i)];
    return r;
}

// q(op) = 0 as an operator identity, tested on every matrix unit.
template <typename F>
bool annihilates(const std::vector<F>& q, const SparseOp<F>& op) {
    int n = op.n;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Mat<F> unit(n, n);
            unit(a, b) = FieldOps<F>::one();
            if (!op_poly_apply(q, op, unit).is_zero())
                return false;
        }
    }
    return true;
}

// Strip every denominator: returns (d, R') with R' = d·R having polynomial
// entries, d the least common multiple of all entry denominators.
std::pair<Poly, SparseOp<Poly>> op_clear_denominators(const SparseOp<RatFunc>& op);

// q(op) = 0 over rational-function data, checked after clearing denominators so
// the unit sweep runs in pure polynomial arithmetic.
bool annihilates_cleared(const UPoly<RatFunc>& q, const SparseOp<RatFunc>& op);

// Minimal polynomial of op as a linear map on n×n matrices, from random Krylov
// sequences; exact over the rationals, Monte Carlo only in that extra random
// starts could (with vanishing probability) be needed.
UPoly<Rational> op_minpoly_numeric(const SparseOp<Rational>& op, PointSampler& sampler,
                                   int starts = 4);

// From an annihilating polynomial p with p(0) ≠ 0 excluded (families here all
// have p(0) = 0, i.e. a zero root), build the resolvent coefficients
//   q_v(x) = (p(−v) − p(x)) / (p(−v)·(v+x)),
// a polynomial in x over rational functions of v with (v+x)·q_v(x) ≡ 1 mod p.
UPoly<RatFunc> resolvent_from_annihilator(const UPoly<RatFunc>& p);

// (v+op)∘q(op) = identity, verified on every matrix unit after denominator
// clearing.  q has coefficients rational in v (and any structure parameters).
bool check_resolvent(const UPoly<RatFunc>& q, const SparseOp<RatFunc>& op);

}  // namespace pencil
