#pragma once

// Spectral-parameter r-matrices and the Yang-Baxter verification suites:
//  * r(u,v) = 1/(u-v) + q_v(R) assembled from each family's operator R and
//    the resolvent q_v of its annihilating polynomial,
//  * the associative equation as a canonical 3-tensor
//      (r(u,w)x)(r(u,v)y) - r(u,v)((r(v,w)x)y) - r(u,w)(x(r(w,v)y)) = 0,
//  * the Lie (bracketed) equation, reduced to two associative checks by the
//    identity  lie(u,v,w; x,y) = ass(u,v,w; x,y) - ass(u,w,v; y,x),
//  * the worked examples (constant-slope diagonal family, the (e,f) pair
//    family, left multiplication), and
//  * closure tensors of factorized forms r(u,v)x = sum_i a_i(u,v) x b^i(v,u)
//    together with their compatibility identities.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pencil/algebra.hpp"
#include "pencil/families.hpp"
#include "pencil/sample.hpp"

namespace pencil {

// --- simultaneous substitution ----------------------------------------------

// Substitute several variables at once; sequential substitution is wrong for
// permutations of the spectral slots like (u,v,w) -> (v,w,u).
using Subst = std::array<std::optional<RatFunc>, kNumVars>;

RatFunc subst_vars(const RatFunc& f, const Subst& s);
Mat<RatFunc> subst_vars(const Mat<RatFunc>& m, const Subst& s);

// A function stored on canonical slots (u, v) moved to slots (s1, s2), and a
// three-slot tensor moved from (u, v, w) to (s1, s2, s3).
Mat<RatFunc> at_slots(const Mat<RatFunc>& m, Var s1, Var s2);
RatFunc at_slots3(const RatFunc& f, Var s1, Var s2, Var s3);

// --- family r-matrices --------------------------------------------------------

// Annihilating polynomial of R with the central scalar filled in: the
// closed-form cubics/quartics where available; E7/E8 use the same quartic
// shape as the even D series (their computed minimal polynomial).
UPoly<RatFunc> family_annihilator(const FamilyRep& rep);

// q_v with (v + R) q_v(R) = Id, coefficients rational in Var::V, lambda, t.
UPoly<RatFunc> family_resolvent(const FamilyRep& rep);

// r(s1,s2) x = x/(s1-s2) + q_{s2}(R) x with symbolic spectral slots.
SparseOp<RatFunc> r_matrix(const FamilyRep& rep, Var s1, Var s2);

// The alternative form r(u,v) = (1/(u-v)) S_u S_v^{-1} with S_v = 1 + v R and
// S_v^{-1} = (1/v) q_{1/v}(R); equivalent to r_matrix but not equal to it.
SparseOp<RatFunc> r_matrix_isom(const FamilyRep& rep, Var s1, Var s2);

// (u-v) r(u,v) at u = v is the identity operator.  For E7/E8 the check runs
// at a sampled non-degenerate (lambda, t) with the spectral slots symbolic.
bool r_limit_is_identity(const FamilyRep& rep, unsigned seed = 0);

// Total degree in the spectral variables of the cleared associative-YBE
// residual numerators, documenting the sampled-mode certificate.
long ybass_degree_bound(const FamilyRep& rep);

// --- Yang-Baxter residuals ----------------------------------------------------

// Associative equation as a canonical 3-tensor over all (x, y); complete, but
// only affordable when the operators' blocks are few.
template <typename F>
bool ybass_zero(const SparseOp<F>& r_uw, const SparseOp<F>& r_uv, const SparseOp<F>& r_vw,
                const SparseOp<F>& r_wv) {
    const int n = r_uw.n;
    const F one = FieldOps<F>::one();
    const F neg = FieldOps<F>::zero() - one;
    Tensor3Acc<F> acc;
    // (r(u,w)x)(r(u,v)y) = sum E_p x (B_p E_q) y C_q
    for (const auto& [p, bp] : r_uw.blocks) {
        for (const auto& [q, cq] : r_uv.blocks) {
            SMat<F> mid = bp * SMat<F>::unit(n, n, q.first, q.second, one);
            if (!mid.is_zero())
                acc.add(SMat<F>::unit(n, n, p.first, p.second, one), mid, cq, one);
        }
    }
    // r(u,v)((r(v,w)x)y) = sum (E_q E_m) x D_m y C_q
    for (const auto& [q, cq] : r_uv.blocks) {
        for (const auto& [m, dm] : r_vw.blocks) {
            if (q.second != m.first) continue;
            acc.add(SMat<F>::unit(n, n, q.first, m.second, one), dm, cq, neg);
        }
    }
    // r(u,w)(x(r(w,v)y)) = sum E_p x A_m y (E_m B_p), with r(w,v) in
    // right-unit form sum A_m x E_m.
    auto rnf = right_normal_form(r_wv);
    for (const auto& [m, am] : rnf) {
        for (const auto& [p, bp] : r_uw.blocks) {
            SMat<F> tail = SMat<F>::unit(n, n, m.first, m.second, one) * bp;
            if (!tail.is_zero())
                acc.add(SMat<F>::unit(n, n, p.first, p.second, one), am, tail, neg);
        }
    }
    return acc.is_zero();
}

// Lie equation via the permuted associative tensors:
//   lie(u,v,w; x,y) = ass(u,v,w; x,y) - ass(u,w,v; y,x).
template <typename F>
bool yblie_zero(const SparseOp<F>& r_uw, const SparseOp<F>& r_uv, const SparseOp<F>& r_vw,
                const SparseOp<F>& r_wv) {
    return ybass_zero(r_uw, r_uv, r_vw, r_wv) && ybass_zero(r_uv, r_uw, r_wv, r_vw);
}

// Residuals on concrete arguments (used for random probes and for the direct
// bracketed cross-check of the Lie equation).
template <typename F>
Mat<F> ybass_residual(const SparseOp<F>& r_uw, const SparseOp<F>& r_uv, const SparseOp<F>& r_vw,
                      const SparseOp<F>& r_wv, const Mat<F>& x, const Mat<F>& y) {
    return r_uw.apply(x) * r_uv.apply(y) - r_uv.apply(r_vw.apply(x) * y) -
           r_uw.apply(x * r_wv.apply(y));
}

template <typename F>
Mat<F> yblie_residual(const SparseOp<F>& r_uw, const SparseOp<F>& r_uv, const SparseOp<F>& r_vw,
                      const SparseOp<F>& r_wv, const Mat<F>& x, const Mat<F>& y) {
    auto comm = [](const Mat<F>& a, const Mat<F>& b) { return a * b - b * a; };
    return comm(r_uw.apply(x), r_uv.apply(y)) - r_uv.apply(comm(r_vw.apply(x), y)) -
           r_uw.apply(comm(x, r_wv.apply(y)));
}

// Direct bracketed evaluation over every basis pair; complete since the
// residual is bilinear.  Affordable for small n only.
template <typename F>
bool yblie_zero_on_units(const SparseOp<F>& r_uw, const SparseOp<F>& r_uv,
                         const SparseOp<F>& r_vw, const SparseOp<F>& r_wv) {
    const int n = r_uw.n;
    const F one = FieldOps<F>::one();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Mat<F> x(n, n), y(n, n);
                    x(a, b) = one;
                    y(c, d) = one;
                    if (!yblie_residual(r_uw, r_uv, r_vw, r_wv, x, y).is_zero()) return false;
                }
    return true;
}

// Adjoint under the trace form (x, y) = tr(xy): the adjoint of x -> a x b is
// y -> b y a, so the unit-left blocks swap sides.
template <typename F>
SparseOp<F> trace_adjoint(const SparseOp<F>& op) {
    SparseOp<F> out(op.n);
    const F one = FieldOps<F>::one();
    for (const auto& [ij, b] : op.blocks)
        out.add_pair(b, SMat<F>::unit(op.n, op.n, ij.first, ij.second, one), one);
    return out;
}

// Whether adjoint(r(u,v)) == -r(v,u); the family solutions are not unitary,
// so reports record the result rather than requiring it.
bool r_unitary(const FamilyRep& rep);

// --- symbolic and sampled family suites ---------------------------------------

// Full tensor check, symbolic in (u, v, w, lambda, t); small families only.
bool check_ybass_symbolic(const FamilyRep& rep);
bool check_yblie_symbolic(const FamilyRep& rep);

struct YbeSampled {
    bool ok = true;       // ass_ok && lie_ok
    bool ass_ok = true;
    bool lie_ok = true;
    std::string regime;  // "tensor" (complete per sample) or "probes"
    std::string detail;  // first failure description
    std::vector<std::string> points;  // printable (lambda, t, u, v, w) samples
};

// Associative + Lie equations at seeded random spectral samples away from the
// degeneracy locus.  n <= 12: complete tensor checks per sample; larger n:
// random dense probe pairs (polynomial identity testing).
YbeSampled check_ybe_sampled(const FamilyRep& rep, int points, unsigned seed, int probes = 4);

// The isomorphism form (1/(u-v)) S_u S_v^{-1} passes the associative equation
// at seeded samples (complete tensor per sample; small n).
YbeSampled check_ybass_isom_sampled(const FamilyRep& rep, int points, unsigned seed);

// --- worked examples -----------------------------------------------------------

// Left multiplication R(x) = a x on Mat_2: x o y = x a y,
// r(u,v) = 1/(u-v) + (v+a)^{-1} (as left multiplication), and the equivalent
// isomorphism form (1/(u-v)) (1+u a)(1+v a)^{-1}.
struct LeftMultExample {
    Mat<RatFunc> a;
    SparseOp<RatFunc> r(Var s1, Var s2) const;
    SparseOp<RatFunc> r_isom(Var s1, Var s2) const;
};
LeftMultExample make_leftmult_example(unsigned seed);

struct LeftMultChecks {
    bool ybass = false;        // closed form, symbolic tensor
    bool yblie = false;
    bool ybass_isom = false;   // isomorphism form, symbolic tensor
    bool multiplicative = false;  // (1+la)x(1+la)y = (1+la)(xy + l x o y)
};
LeftMultChecks check_leftmult(const LeftMultExample& ex);

// The (e,f) pair family: r(u,v)x = (1/(u-v)) e(u,v) x f(v,u) with e(u,v) = 1
// and f(u,v) = (v-u)(u+C)^{-1} + 1 for a random rational constant matrix C.
struct PairExample {
    int dim = 0;
    Mat<RatFunc> C;
    Mat<RatFunc> f(Var s1, Var s2) const;
    SparseOp<RatFunc> r(Var s1, Var s2) const;
};
PairExample make_pair_example(int dim, unsigned seed);

struct PairExampleChecks {
    bool ee = false;            // e(u,v)e(v,w) = e(u,w)
    bool ff = false;            // f(u,v)f(v,w) = f(u,w)
    bool mixed_stated = false;  // e(u,v)f(v,w) = ((u-v)/(u-w))f(u,w) + ((v-w)/(u-w))e(u,w)
    bool mixed_swapped = false; // the same with the product order f(u,v)e(v,w)
    bool ybass = false;
    bool yblie = false;
};
PairExampleChecks check_pair_example(const PairExample& ex);

// The diagonal family on C^p: r(u,v)e_i = sum_j psi_i(v)/(phi_j(u)-phi_i(v)) e_j
// with phi_j(x) = x + j and psi_i = 1; associative equation checked
// componentwise, symbolically in (u, v, w).
bool check_diagonal_example(int p);

// --- factorized forms and closure tensors ---------------------------------------

// r(u,v)x = sum_i a_i(u,v) x b^i(v,u); both lists are stored on canonical
// slots (U, V) as matrices over the rational-function field.
struct FactorizedR {
    std::vector<Mat<RatFunc>> a, b;
};

// phi_{i,j}^k and psi^{i,j}_k on canonical slots (U, V, W), flattened with
// k fastest: index (i*p + j)*p + k.
struct ClosureTensors {
    int p = 0;
    std::vector<RatFunc> phi, psi;
    const RatFunc& phi_at(int i, int j, int k) const { return phi[(i * p + j) * p + k]; }
    const RatFunc& psi_at(int i, int j, int k) const { return psi[(i * p + j) * p + k]; }
};

// Both factor families are linearly independent over the function field.
bool factor_families_independent(const FactorizedR& r);

// Solve a_i(u,v)a_j(v,w) = phi_{i,j}^k(u,v,w) a_k(u,w) and
// b^i(u,v)b^j(v,w) = psi^{i,j}_k(u,v,w) b^k(u,w) by linear algebra; throws if
// a product leaves the span or the expansion is not unique.
ClosureTensors solve_closure(const FactorizedR& r);

// b^i(u,v)a_j(v,w) = phi_{j,k}^i(v,w,u) b^k(u,w) + psi^{k,i}_j(w,u,v) a_k(u,w).
bool check_mixed_closure(const FactorizedR& r, const ClosureTensors& t);

// The three compatibility identities of the closure tensors, with a fourth
// spectral slot on Var::T.
bool check_closure_compat(const ClosureTensors& t);

// Associative equation for the factorized r, as a symbolic tensor.
bool check_factorized_ybass(const FactorizedR& r);

// The examples as factorized forms: the pair family with p = 1 (a = e,
// b(s1,s2) = f(s1,s2)/(s2-s1)), left multiplication with p = 1
// (a(u,v) = 1/(u-v) + (v+a)^{-1}, b = 1), and the diagonal family with p^2
// unit terms in Mat_p.
FactorizedR factorized_of_pair(const PairExample& ex);
FactorizedR factorized_of_leftmult(const LeftMultExample& ex);
FactorizedR factorized_of_diagonal(int p);

// --- compatibility (pencil) driver ----------------------------------------------

struct PencilChecks {
    bool mixed = false;           // first-order pencil layer
    bool multiplicative = false;  // R(x)R(y) = R(x o y)
    std::optional<bool> assoc_direct;  // direct second-order tensor, when run
    bool bridge = false;          // associator-vs-defect identity on random triples
    std::string regime;           // "symbolic", "cleared", or "sampled"
};

// Pencil associativity per power of the pencil parameter plus the
// multiplicativity identity.  Small families run fully symbolic; E7/E8 run in
// cleared polynomial arithmetic or at sampled (lambda, t) points, per the
// documented regime.
PencilChecks check_pencil(const FamilyRep& rep, unsigned seed = 0);

}  // namespace pencil
