#pragma once

#include "pencil/ratfunc.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pencil {

struct SingularError : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense matrix over an exact field F (Rational or RatFunc).
template <class F>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(std::size_t(rows) * std::size_t(cols), FieldOps<F>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = FieldOps<F>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!FieldOps<F>::is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    Mat& operator*=(const F& c) {
        for (auto& x : a_) x = x * c;
        return *this;
    }
    friend Mat operator*(Mat a, const F& c) { return a *= c; }
    friend Mat operator*(const F& c, Mat a) { return a *= c; }

    // Sparse-aware product: zero entries of the left factor are skipped, which is
    // where nearly all of the savings come from for block-unit generator matrices.
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::logic_error("mat: shape mismatch in product");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (FieldOps<F>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (FieldOps<F>::is_zero(bkj)) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    F trace() const {
        F s = FieldOps<F>::zero();
        for (int i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    int count_nonzero() const {
        int k = 0;
        for (auto& x : a_)
            if (!FieldOps<F>::is_zero(x)) ++k;
        return k;
    }

  private:
    int rows_, cols_;
    std::vector<F> a_;
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::logic_error("mat: shape mismatch");
    }
};

// Row-major Kronecker product: (a ⊗ b)[(i1*b.rows+i2),(j1*b.cols+j2)] = a(i1,j1) b(i2,j2).
template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            if (FieldOps<F>::is_zero(a(i1, j1))) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    return r;
}

// Reduced row echelon form in place. Returns pivot columns. Deterministic: the
// pivot is always the first row with a nonzero entry in the current column.
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!FieldOps<F>::is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = FieldOps<F>::one() / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || FieldOps<F>::is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return int(rref(m).size());
}

template <class F>
struct LinearSolution {
    std::optional<std::vector<F>> solution;  // one particular solution if consistent
    std::vector<std::vector<F>> kernel_basis;
};

// Solves A x = b exactly; also returns a basis of ker A (always).
template <class F>
LinearSolution<F> solve_linear(const Mat<F>& a, const std::vector<F>& b) {
    if (int(b.size()) != a.rows()) throw std::logic_error("solve: rhs size mismatch");
    Mat<F> m(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[std::size_t(i)];
    }
    std::vector<int> pivots = rref(m);
    LinearSolution<F> out;
    bool consistent = true;
    for (int pi = 0; pi < int(pivots.size()); ++pi)
        if (pivots[std::size_t(pi)] == a.cols()) consistent = false;
    std::vector<int> pivot_of_col(std::size_t(a.cols()), -1);
    {
        int r = 0;
        for (int c : pivots)
            if (c < a.cols()) pivot_of_col[std::size_t(c)] = r++;
    }
    if (consistent) {
        std::vector<F> x(std::size_t(a.cols()), FieldOps<F>::zero());
        for (int c = 0; c < a.cols(); ++c)
            if (pivot_of_col[std::size_t(c)] >= 0)
                x[std::size_t(c)] = m(pivot_of_col[std::size_t(c)], a.cols());
        out.solution = std::move(x);
    }
    for (int c = 0; c < a.cols(); ++c) {
        if (pivot_of_col[std::size_t(c)] >= 0) continue;
        std::vector<F> k(std::size_t(a.cols()), FieldOps<F>::zero());
        k[std::size_t(c)] = FieldOps<F>::one();
        for (int c2 = 0; c2 < a.cols(); ++c2)
            if (pivot_of_col[std::size_t(c2)] >= 0)
                k[std::size_t(c2)] = -m(pivot_of_col[std::size_t(c2)], c);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

// Exact inverse via Gauss-Jordan on [A | I]; nullopt if singular.
template <class F>
std::optional<Mat<F>> try_inverse(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw std::logic_error("inverse: non-square");
    int n = a.rows();
    Mat<F> m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = FieldOps<F>::one();
    }
    std::vector<int> pivots = rref(m);
    if (int(pivots.size()) != n || pivots[std::size_t(n - 1)] != n - 1) return std::nullopt;
    Mat<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularError("mat: singular matrix has no inverse");
    return *inv;
}

// Determinant by field elimination (entries stay normalized at every step).
template <class F>
F det(Mat<F> m) {
    if (m.rows() != m.cols()) throw std::logic_error("det: non-square");
    int n = m.rows();
    F d = FieldOps<F>::one();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!FieldOps<F>::is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) return FieldOps<F>::zero();
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d = d * m(c, c);
        F inv = FieldOps<F>::one() / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (FieldOps<F>::is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Fraction-free Bareiss determinant over the polynomial ring: intermediate entries
// are exact minors, every division is exact. Used for base-change degeneracy loci.
Poly det_bareiss(Mat<Poly> m);

// Clears denominators of a RatFunc matrix row by row; det A = det(cleared) / prod(row lcms).
RatFunc det_ratfunc(const Mat<RatFunc>& a);

// Row-major vectorization index helpers: vec(X)[i*n+j] = X(i,j).
template <class F>
std::vector<F> vec_of(const Mat<F>& x) {
    std::vector<F> v;
    v.reserve(std::size_t(x.rows()) * std::size_t(x.cols()));
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
    return v;
}

template <class F>
Mat<F> mat_of(const std::vector<F>& v, int rows, int cols) {
    Mat<F> m(rows, cols);
    std::size_t k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v[k++];
    return m;
}

// ---- univariate polynomials over F (for operator identities and inverses) ----

// Coefficients low to high; normalized so the leading coefficient is nonzero.
template <class F>
using UPoly = std::vector<F>;

namespace upoly {

template <class F>
void trim(UPoly<F>& p) {
    while (!p.empty() && FieldOps<F>::is_zero(p.back())) p.pop_back();
}

template <class F>
int deg(const UPoly<F>& p) {
    return int(p.size()) - 1;
}

template <class F>
UPoly<F> add(UPoly<F> a, const UPoly<F>& b) {
    if (a.size() < b.size()) a.resize(b.size(), FieldOps<F>::zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

template <class F>
UPoly<F> scale(UPoly<F> a, const F& c) {
    for (auto& x : a) x = x * c;
    trim(a);
    return a;
}

template <class F>
UPoly<F> mul(const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<F> r(a.size() + b.size() - 1, FieldOps<F>::zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

template <class F>
UPoly<F> monic(UPoly<F> p) {
    trim(p);
    if (p.empty()) return p;
    F inv = FieldOps<F>::one() / p.back();
    for (auto& x : p) x = x * inv;
    return p;
}

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(UPoly<F> a, const UPoly<F>& b) {
    if (b.empty()) throw std::domain_error("upoly: division by zero");
    UPoly<F> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldOps<F>::zero());
    while (a.size() >= b.size() && !a.empty()) {
        F c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (!a.empty() && a.size() > shift + b.size() - 1) a.resize(shift + b.size() - 1);
        trim(a);
    }
    trim(q);
    return {q, a};
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class F>
UPoly<F> lcm(const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    auto g = gcd<F>(a, b);
    auto [q, r] = divmod(mul(a, b), g);
    if (!r.empty()) throw std::logic_error("upoly: lcm division not exact");
    return monic(q);
}

template <class F>
std::string to_string(const UPoly<F>& p, const std::string& x = "x") {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (FieldOps<F>::is_zero(p[i])) continue;
        if (!s.empty()) s += " + ";
        s += "(" + FieldOps<F>::str(p[i]) + ")";
        if (i >= 1) s += "*" + x;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace upoly

// Horner evaluation of p at a square matrix.
template <class F>
Mat<F> upoly_eval_mat(const UPoly<F>& p, const Mat<F>& m) {
    int n = m.rows();
    Mat<F> acc(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        for (int d = 0; d < n; ++d) acc(d, d) += p[i];
    }
    return acc;
}

// Least-degree monic p with p(M) = 0, certified by explicit substitution on every
// basis vector. Local minimal polynomials per unit vector are combined by lcm.
template <class F>
UPoly<F> minimal_polynomial(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw std::logic_error("minpoly: non-square");
    int n = m.rows();
    UPoly<F> p{FieldOps<F>::one()};  // constant 1 == min poly of nothing
    for (int s = 0; s < n; ++s) {
        // Krylov iterates of e_s, reduced against an echelon basis with coordinates.
        std::vector<std::vector<F>> basis;   // echelon vectors
        std::vector<std::vector<F>> coords;  // expression of each echelon vector in iterates
        std::vector<int> pivot_cols;
        std::vector<F> v(std::size_t(n), FieldOps<F>::zero());
        v[std::size_t(s)] = FieldOps<F>::one();
        std::vector<std::vector<F>> iterates;
        UPoly<F> local;
        while (true) {
            std::vector<F> red = v;
            std::vector<F> co(iterates.size() + 1, FieldOps<F>::zero());
            co.back() = FieldOps<F>::one();
            for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                const F& lead = red[std::size_t(pivot_cols[bi])];
                if (FieldOps<F>::is_zero(lead)) continue;
                F f = lead;
                for (int j = 0; j < n; ++j) red[std::size_t(j)] -= f * basis[bi][std::size_t(j)];
                for (std::size_t cj = 0; cj < coords[bi].size(); ++cj)
                    co[cj] -= f * coords[bi][cj];
            }
            int piv = -1;
            for (int j = 0; j < n; ++j)
                if (!FieldOps<F>::is_zero(red[std::size_t(j)])) {
                    piv = j;
                    break;
                }
            if (piv < 0) {
                // Dependency found: co gives the local minimal polynomial directly.
                local = upoly::monic(co);
                break;
            }
            F inv = FieldOps<F>::one() / red[std::size_t(piv)];
            for (auto& x : red) x = x * inv;
            for (auto& x : co) x = x * inv;
            basis.push_back(red);
            co.resize(iterates.size() + 1, FieldOps<F>::zero());
            coords.push_back(co);
            pivot_cols.push_back(piv);
            iterates.push_back(v);
            // next iterate
            std::vector<F> nv(std::size_t(n), FieldOps<F>::zero());
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (FieldOps<F>::is_zero(m(i, j))) continue;
                    nv[std::size_t(i)] += m(i, j) * v[std::size_t(j)];
                }
            }
            v = std::move(nv);
        }
        p = upoly::lcm(p, local);
        if (upoly::deg(p) == n) break;  // cannot grow further
    }
    if (!upoly_eval_mat(p, m).is_zero())
        throw std::logic_error("minpoly: certification failed");
    return p;
}

}  // namespace pencil
