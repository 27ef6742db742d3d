#include "pencil/algebra.hpp"

#include <stdexcept>

namespace pencil {

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly::zero();
    return Poly::divexact(a * b, Poly::gcd(a, b));
}

}  // namespace

std::pair<Poly, SparseOp<Poly>> op_clear_denominators(const SparseOp<RatFunc>& op) {
    Poly d = Poly::one();
    for (const auto& [ij, B] : op.blocks)
        for (const auto& [kl, v] : B.e)
            d = poly_lcm(d, v.den());
    SparseOp<Poly> cleared(op.n);
    for (const auto& [ij, B] : op.blocks) {
        SMat<Poly> Bc(op.n, op.n);
        for (const auto& [kl, v] : B.e)
            Bc.add_at(kl.first, kl.second, v.num() * Poly::divexact(d, v.den()));
        if (!Bc.is_zero())
            cleared.blocks.emplace(ij, std::move(Bc));
    }
    return {d, cleared};
}

bool annihilates_cleared(const UPoly<RatFunc>& q, const SparseOp<RatFunc>& op) {
    UPoly<RatFunc> qq = q;
    upoly::trim(qq);
    if (qq.empty())
        return true;
    auto [d, cleared] = op_clear_denominators(op);
    int deg = static_cast<int>(qq.size()) - 1;
    // q(R) = sum q_i R^i = d^{-deg} * sum (q_i d^{deg-i}) (dR)^i; scale the
    // coefficients and strip their denominators too.
    std::vector<RatFunc> scaled(qq.size());
    Poly D = Poly::one();
    for (int i = 0; i <= deg; ++i) {
        scaled[static_cast<size_t>(i)] =
            qq[static_cast<size_t>(i)] * RatFunc(d.pow(static_cast<unsigned>(deg - i)));
        D = poly_lcm(D, scaled[static_cast<size_t>(i)].den());
    }
    std::vector<Poly> cp(qq.size());
    for (int i = 0; i <= deg; ++i) {
        const RatFunc& s = scaled[static_cast<size_t>(i)];
        cp[static_cast<size_t>(i)] = s.num() * Poly::divexact(D, s.den());
    }
    return annihilates(cp, cleared);
}

UPoly<Rational> op_minpoly_numeric(const SparseOp<Rational>& op, PointSampler& sampler,
                                   int starts) {
    const int n = op.n;
    const int nn = n * n;
    UPoly<Rational> result{Rational(1)};

    auto flatten = [&](const Mat<Rational>& m) {
        std::vector<Rational> v(static_cast<size_t>(nn));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                v[static_cast<size_t>(r * n + c)] = m(r, c);
        return v;
    };

    auto one_start = [&]() {
        Mat<Rational> x(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                x(r, c) = sampler.small_rational();
        // Echelon basis of Krylov iterates with tracked combinations.
        std::vector<std::vector<Rational>> basis;
        std::vector<int> pivots;
        std::vector<UPoly<Rational>> combos;  // basis[i] = combos[i](op) applied to x, flattened
        Mat<Rational> cur = x;
        for (int k = 0;; ++k) {
            std::vector<Rational> v = flatten(cur);
            UPoly<Rational> combo(static_cast<size_t>(k) + 1, Rational(0));
            combo[static_cast<size_t>(k)] = Rational(1);
            for (size_t i = 0; i < basis.size(); ++i) {
                Rational c = v[static_cast<size_t>(pivots[i])];
                if (rat_is_zero(c))
                    continue;
                for (int j = 0; j < nn; ++j)
                    if (!rat_is_zero(basis[i][static_cast<size_t>(j)]))
                        v[static_cast<size_t>(j)] -= c * basis[i][static_cast<size_t>(j)];
                combo = upoly::add(combo, upoly::scale(combos[i], Rational(-c)));
            }
            int piv = -1;
            for (int j = 0; j < nn; ++j)
                if (!rat_is_zero(v[static_cast<size_t>(j)])) {
                    piv = j;
                    break;
                }
            if (piv < 0)
                return combo;  // monic by construction: leading coefficient 1 at degree k
            Rational inv = Rational(1) / v[static_cast<size_t>(piv)];
            for (int j = 0; j < nn; ++j)
                v[static_cast<size_t>(j)] *= inv;
            combo = upoly::scale(combo, inv);
            basis.push_back(std::move(v));
            pivots.push_back(piv);
            combos.push_back(std::move(combo));
            cur = op.apply(cur);
            if (k > nn)
                throw std::logic_error("op_minpoly_numeric: no dependency found");
        }
    };

    for (int s = 0; s < starts; ++s)
        result = upoly::lcm(result, one_start());
    result = upoly::monic(result);

    // Certify on fresh random matrices; extend with more starts if a residual
    // survives (rare: only if every earlier start hit an invariant subspace).
    for (int guard = 0; guard < 3 * starts; ++guard) {
        Mat<Rational> x(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                x(r, c) = sampler.small_rational();
        if (op_poly_apply(result, op, x).is_zero())
            return result;
        result = upoly::monic(upoly::lcm(result, one_start()));
    }
    throw std::logic_error("op_minpoly_numeric: failed to stabilize");
}

UPoly<RatFunc> resolvent_from_annihilator(const UPoly<RatFunc>& p) {
    UPoly<RatFunc> pp = p;
    upoly::trim(pp);
    if (upoly::deg(pp) < 1)
        throw std::invalid_argument("resolvent_from_annihilator: need degree >= 1");
    RatFunc v = RatFunc::variable(Var::V);
    // p(-v), by Horner.
    RatFunc p_neg_v;
    for (size_t i = pp.size(); i-- > 0;)
        p_neg_v = p_neg_v * (-v) + pp[i];
    if (p_neg_v.is_zero())
        throw std::invalid_argument("resolvent_from_annihilator: p(-v) vanishes");
    // numerator p(-v) - p(x), then exact division by (v + x).
    UPoly<RatFunc> numer = pp;
    for (auto& c : numer)
        c = -c;
    numer[0] += p_neg_v;
    UPoly<RatFunc> vx{v, RatFunc(Rational(1))};
    auto [quot, rem] = upoly::divmod(numer, vx);
    upoly::trim(rem);
    if (!rem.empty())
        throw std::logic_error("resolvent_from_annihilator: inexact division by v + x");
    RatFunc scale = p_neg_v.inverse();
    for (auto& c : quot)
        c *= scale;
    return quot;
}

bool check_resolvent(const UPoly<RatFunc>& q, const SparseOp<RatFunc>& op) {
    UPoly<RatFunc> vx{RatFunc::variable(Var::V), RatFunc(Rational(1))};
    UPoly<RatFunc> h = upoly::mul(vx, q);
    if (h.empty())
        return false;
    h[0] -= RatFunc(Rational(1));
    return annihilates_cleared(h, op);
}

}  // namespace pencil
