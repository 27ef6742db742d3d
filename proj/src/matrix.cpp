#include "pencil/matrix.hpp"

namespace pencil {

Poly det_bareiss(Mat<Poly> m) {
    if (m.rows() != m.cols()) throw std::logic_error("det: non-square");
    int n = m.rows();
    if (n == 0) return Poly::one();
    int sign = 1;
    Poly prev = Poly::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Poly();
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = Poly::divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = Poly();
        }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

static Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return Poly::divexact(a * b, Poly::gcd(a, b));
}

RatFunc det_ratfunc(const Mat<RatFunc>& a) {
    if (a.rows() != a.cols()) throw std::logic_error("det: non-square");
    int n = a.rows();
    Mat<Poly> cleared(n, n);
    Poly scale = Poly::one();
    for (int i = 0; i < n; ++i) {
        Poly row_lcm = Poly::one();
        for (int j = 0; j < n; ++j) row_lcm = poly_lcm(row_lcm, a(i, j).den());
        for (int j = 0; j < n; ++j)
            cleared(i, j) = a(i, j).num() * Poly::divexact(row_lcm, a(i, j).den());
        scale = scale * row_lcm;
    }
    return RatFunc(det_bareiss(std::move(cleared)), scale);
}

}  // namespace pencil
