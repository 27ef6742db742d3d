#pragma once

#include "pencil/matrix.hpp"

#include <array>
#include <map>
#include <string>

namespace pencil {

// Sparse exact matrix keyed by (row, col); zero entries are never stored.
template <class F>
struct SMat {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, F> e;

    SMat() = default;
    SMat(int r, int c) : rows(r), cols(c) {}

    static SMat from_dense(const Mat<F>& m) {
        SMat s(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!FieldOps<F>::is_zero(m(i, j))) s.e.emplace(std::make_pair(i, j), m(i, j));
        return s;
    }

    static SMat unit(int rows, int cols, int i, int j, const F& c) {
        SMat s(rows, cols);
        if (!FieldOps<F>::is_zero(c)) s.e.emplace(std::make_pair(i, j), c);
        return s;
    }

    static SMat identity(int n) {
        SMat s(n, n);
        for (int i = 0; i < n; ++i) s.e.emplace(std::make_pair(i, i), FieldOps<F>::one());
        return s;
    }

    Mat<F> to_dense() const {
        Mat<F> m(rows, cols);
        for (auto& [k, v] : e) m(k.first, k.second) = v;
        return m;
    }

    bool is_zero() const { return e.empty(); }
    int nnz() const { return int(e.size()); }

    void add_at(int i, int j, const F& v) {
        if (FieldOps<F>::is_zero(v)) return;
        auto it = e.find({i, j});
        if (it == e.end()) {
            e.emplace(std::make_pair(i, j), v);
        } else {
            it->second += v;
            if (FieldOps<F>::is_zero(it->second)) e.erase(it);
        }
    }

    void add_scaled(const SMat& o, const F& c) {
        if (FieldOps<F>::is_zero(c)) return;
        for (auto& [k, v] : o.e) add_at(k.first, k.second, c * v);
    }

    SMat scaled(const F& c) const {
        SMat r(rows, cols);
        if (FieldOps<F>::is_zero(c)) return r;
        for (auto& [k, v] : e) {
            F w = c * v;
            if (!FieldOps<F>::is_zero(w)) r.e.emplace(k, std::move(w));
        }
        return r;
    }

    SMat transpose() const {
        SMat r(cols, rows);
        for (auto& [k, v] : e) r.e.emplace(std::make_pair(k.second, k.first), v);
        return r;
    }

    friend SMat operator*(const SMat& a, const SMat& b) {
        if (a.cols != b.rows) throw std::logic_error("smat: shape mismatch in product");
        SMat r(a.rows, b.cols);
        for (auto& [ka, va] : a.e) {
            auto it = b.e.lower_bound({ka.second, 0});
            auto end = b.e.lower_bound({ka.second + 1, 0});
            for (; it != end; ++it) r.add_at(ka.first, it->first.second, va * it->second);
        }
        return r;
    }

    friend SMat operator+(SMat a, const SMat& b) {
        a.add_scaled(b, FieldOps<F>::one());
        return a;
    }
    friend SMat operator-(SMat a, const SMat& b) {
        a.add_scaled(b, -FieldOps<F>::one());
        return a;
    }
    friend bool operator==(const SMat& a, const SMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

template <class F, class G, class Fn>
SMat<G> smat_map(const SMat<F>& s, Fn fn) {
    SMat<G> r(s.rows, s.cols);
    for (auto& [k, v] : s.e) {
        G w = fn(v);
        if (!FieldOps<G>::is_zero(w)) r.e.emplace(k, std::move(w));
    }
    return r;
}

// Operator on Mat_n in unit-left normal form:  op(x) = sum_{ij} E_ij · x · B_ij.
// The normal form is unique, so the operator is zero iff no blocks remain, and
// composition collapses to block bookkeeping: unit products E_ij E_kl = δ_jk E_il.
template <class F>
struct SparseOp {
    int n = 0;
    std::map<std::pair<int, int>, SMat<F>> blocks;

    SparseOp() = default;
    explicit SparseOp(int dim) : n(dim) {}

    static SparseOp identity(int dim) {
        SparseOp op(dim);
        for (int i = 0; i < dim; ++i)
            op.blocks.emplace(std::make_pair(i, i), SMat<F>::identity(dim));
        return op;
    }

    bool is_zero() const { return blocks.empty(); }
    int block_count() const { return int(blocks.size()); }

    long total_entries() const {
        long t = 0;
        for (auto& [k, b] : blocks) t += b.nnz();
        return t;
    }

    void add_block(int i, int j, const SMat<F>& b, const F& coeff) {
        if (b.is_zero() || FieldOps<F>::is_zero(coeff)) return;
        auto it = blocks.find({i, j});
        if (it == blocks.end()) {
            SMat<F> nb = b.scaled(coeff);
            if (!nb.is_zero()) blocks.emplace(std::make_pair(i, j), std::move(nb));
        } else {
            it->second.add_scaled(b, coeff);
            if (it->second.is_zero()) blocks.erase(it);
        }
    }

    // Adds coeff · (a x b) by expanding the left factor over matrix units.
    void add_pair(const SMat<F>& a, const SMat<F>& b, const F& coeff) {
        for (auto& [k, v] : a.e) add_block(k.first, k.second, b, coeff * v);
    }

    void add_scaled(const SparseOp& o, const F& c) {
        for (auto& [k, b] : o.blocks) add_block(k.first, k.second, b, c);
    }

    // op += c · identity
    void add_scalar(const F& c) {
        if (FieldOps<F>::is_zero(c)) return;
        SMat<F> id = SMat<F>::identity(n);
        for (int i = 0; i < n; ++i) add_block(i, i, id, c);
    }

    SparseOp scaled(const F& c) const {
        SparseOp r(n);
        for (auto& [k, b] : blocks) r.add_block(k.first, k.second, b, c);
        return r;
    }

    Mat<F> apply(const Mat<F>& x) const {
        Mat<F> r(n, x.cols());
        for (auto& [k, b] : blocks) {
            auto [i, j] = k;
            // row i of result += (row j of x) · B_ij
            for (auto& [kb, v] : b.e)
                if (!FieldOps<F>::is_zero(x(j, kb.first))) r(i, kb.second) += x(j, kb.first) * v;
        }
        return r;
    }

    SMat<F> apply(const SMat<F>& x) const {
        SMat<F> r(n, x.cols);
        for (auto& [k, b] : blocks) {
            auto [i, j] = k;
            auto it = x.e.lower_bound({j, 0});
            auto end = x.e.lower_bound({j + 1, 0});
            for (; it != end; ++it)
                for (auto& [kb, v] : b.e)
                    if (kb.first == it->first.second) r.add_at(i, kb.second, it->second * v);
        }
        return r;
    }

    // Row-major vectorization lift: L · vec(x) = vec(op(x)), L[(i n + r),(j n + c)] = B_ij(c, r).
    Mat<F> lift() const {
        Mat<F> l(n * n, n * n);
        for (auto& [k, b] : blocks) {
            auto [i, j] = k;
            for (auto& [kb, v] : b.e) l(i * n + kb.second, j * n + kb.first) = v;
        }
        return l;
    }

    friend bool operator==(const SparseOp& a, const SparseOp& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
};

// p ∘ q (apply q first):  blocks D_il += C_jl · B_ij over the shared index j.
template <class F>
SparseOp<F> compose(const SparseOp<F>& p, const SparseOp<F>& q) {
    if (p.n != q.n) throw std::logic_error("op: dimension mismatch in compose");
    SparseOp<F> r(p.n);
    for (auto& [kp, bp] : p.blocks) {
        auto it = q.blocks.lower_bound({kp.second, 0});
        auto end = q.blocks.lower_bound({kp.second + 1, 0});
        for (; it != end; ++it)
            r.add_block(kp.first, it->first.second, it->second * bp, FieldOps<F>::one());
    }
    return r;
}

// Horner evaluation of a univariate polynomial at an operator.
template <class F>
SparseOp<F> horner_eval_op(const UPoly<F>& p, const SparseOp<F>& r) {
    SparseOp<F> acc(r.n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = compose(acc, r);
        acc.add_scalar(p[i]);
    }
    return acc;
}

template <class F, class G, class Fn>
SparseOp<G> op_map(const SparseOp<F>& s, Fn fn) {
    SparseOp<G> r(s.n);
    for (auto& [k, b] : s.blocks) {
        SMat<G> nb = smat_map<F, G>(b, fn);
        if (!nb.is_zero()) r.blocks.emplace(k, std::move(nb));
    }
    return r;
}

// Accumulates sums of simple tensors A ⊗ B in Mat_n ⊗ Mat_m. The first slot is
// expanded over matrix units, so the sum vanishes iff every accumulated second
// slot vanishes.
template <class F>
struct Tensor2Acc {
    std::map<std::pair<int, int>, SMat<F>> middle;

    void add(const SMat<F>& a, const SMat<F>& b, const F& coeff) {
        if (FieldOps<F>::is_zero(coeff) || a.is_zero() || b.is_zero()) return;
        for (auto& [ka, va] : a.e) {
            auto it = middle.find(ka);
            if (it == middle.end()) {
                SMat<F> nb = b.scaled(coeff * va);
                if (!nb.is_zero()) middle.emplace(ka, std::move(nb));
            } else {
                it->second.add_scaled(b, coeff * va);
                if (it->second.is_zero()) middle.erase(it);
            }
        }
    }

    bool is_zero() const { return middle.empty(); }

    std::string witness() const {
        if (middle.empty()) return "";
        auto& [k, b] = *middle.begin();
        auto& [kb, v] = *b.e.begin();
        return "slot1 unit (" + std::to_string(k.first) + "," + std::to_string(k.second) +
               ") slot2 entry (" + std::to_string(kb.first) + "," + std::to_string(kb.second) +
               ") = " + FieldOps<F>::str(v);
    }
};

// Accumulates sums of simple tensors A ⊗ B ⊗ C in Mat_n^{⊗3}: slots 1 and 3 are
// expanded over matrix units and the middle slot is accumulated per unit pair.
template <class F>
struct Tensor3Acc {
    std::map<std::array<int, 4>, SMat<F>> middle;

    void add(const SMat<F>& a, const SMat<F>& b, const SMat<F>& c, const F& coeff) {
        if (FieldOps<F>::is_zero(coeff) || a.is_zero() || b.is_zero() || c.is_zero()) return;
        for (auto& [ka, va] : a.e)
            for (auto& [kc, vc] : c.e) {
                std::array<int, 4> key{ka.first, ka.second, kc.first, kc.second};
                F w = coeff * va * vc;
                auto it = middle.find(key);
                if (it == middle.end()) {
                    SMat<F> nb = b.scaled(w);
                    if (!nb.is_zero()) middle.emplace(key, std::move(nb));
                } else {
                    it->second.add_scaled(b, w);
                    if (it->second.is_zero()) middle.erase(it);
                }
            }
    }

    bool is_zero() const { return middle.empty(); }

    std::string witness() const {
        if (middle.empty()) return "";
        auto& [k, b] = *middle.begin();
        auto& [kb, v] = *b.e.begin();
        return "slot1 unit (" + std::to_string(k[0]) + "," + std::to_string(k[1]) +
               ") slot3 unit (" + std::to_string(k[2]) + "," + std::to_string(k[3]) +
               ") slot2 entry (" + std::to_string(kb.first) + "," + std::to_string(kb.second) +
               ") = " + FieldOps<F>::str(v);
    }
};

}  // namespace pencil
