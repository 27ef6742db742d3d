#pragma once

#include "pencil/sandwich.hpp"

#include <cstdint>
#include <vector>

namespace pencil {

// Deterministic 64-bit stream (SplitMix64), used to draw exact rational sample
// points. The same seed always yields the same point sequence on any platform.
std::uint64_t splitmix64(std::uint64_t& state);

class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : state_(seed) {}

    // Nonzero rational with numerator in [-60, 60] and denominator in [1, 7].
    Rational small_rational();

    // A full variable assignment such that every polynomial in `avoid` is nonzero.
    // Throws std::runtime_error if 1000 attempts all hit the avoid locus.
    std::array<Rational, kNumVars> point(const std::vector<Poly>& avoid);

  private:
    std::uint64_t state_;
};

// Exact evaluation of symbolic data at a sample point (throws PoleError on poles).
Rational demote(const RatFunc& f, const std::array<Rational, kNumVars>& pt);
Mat<Rational> demote(const Mat<RatFunc>& m, const std::array<Rational, kNumVars>& pt);
SMat<Rational> demote(const SMat<RatFunc>& m, const std::array<Rational, kNumVars>& pt);
SparseOp<Rational> demote(const SparseOp<RatFunc>& op, const std::array<Rational, kNumVars>& pt);

}  // namespace pencil
