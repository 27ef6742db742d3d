#include "pencil/sample.hpp"

#include <stdexcept>

namespace pencil {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational PointSampler::small_rational() {
    std::uint64_t r = splitmix64(state_);
    long num = long(r % 121) - 60;  // [-60, 60]
    if (num == 0) num = 61;
    long den = long((r >> 32) % 7) + 1;  // [1, 7]
    return rat(num, den);
}

std::array<Rational, kNumVars> PointSampler::point(const std::vector<Poly>& avoid) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Rational, kNumVars> pt;
        for (int v = 0; v < kNumVars; ++v) pt[std::size_t(v)] = small_rational();
        bool ok = true;
        for (const Poly& p : avoid)
            if (rat_is_zero(p.eval(pt))) {
                ok = false;
                break;
            }
        if (ok) return pt;
    }
    throw std::runtime_error("sample: no admissible point found in 1000 attempts");
}

Rational demote(const RatFunc& f, const std::array<Rational, kNumVars>& pt) {
    return f.eval(pt);
}

Mat<Rational> demote(const Mat<RatFunc>& m, const std::array<Rational, kNumVars>& pt) {
    Mat<Rational> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = m(i, j).eval(pt);
    return r;
}

SMat<Rational> demote(const SMat<RatFunc>& m, const std::array<Rational, kNumVars>& pt) {
    return smat_map<RatFunc, Rational>(m, [&](const RatFunc& f) { return f.eval(pt); });
}

SparseOp<Rational> demote(const SparseOp<RatFunc>& op, const std::array<Rational, kNumVars>& pt) {
    return op_map<RatFunc, Rational>(op, [&](const RatFunc& f) { return f.eval(pt); });
}

}  // namespace pencil
