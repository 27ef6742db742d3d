#include "pencil/ratfunc.hpp"

namespace pencil {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("ratfunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly::divexact(num_, g);
            den_ = Poly::divexact(den_, g);
        }
    }
    Rational lc = den_.leading_term().c;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::as_rational() const {
    if (!is_constant()) throw std::logic_error("ratfunc: as_rational on non-constant");
    return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    // Cross-cancel before multiplying to keep intermediate polynomials small.
    Poly a = num_, b = o.num_, c = o.den_, d = den_;
    if (!c.is_one() && !a.is_constant()) {
        Poly g = Poly::gcd(a, c);
        if (!g.is_one()) {
            a = Poly::divexact(a, g);
            c = Poly::divexact(c, g);
        }
    }
    if (!d.is_one() && !b.is_constant()) {
        Poly g = Poly::gcd(b, d);
        if (!g.is_one()) {
            b = Poly::divexact(b, g);
            d = Poly::divexact(d, g);
        }
    }
    num_ = a * b;
    den_ = d * c;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("ratfunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

namespace {

RatFunc horner(const Poly& p, Var x, const RatFunc& value) {
    auto cs = p.coeffs_in(x);
    RatFunc acc;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * value + RatFunc(cs[i]);
    return acc;
}

}  // namespace

RatFunc RatFunc::substitute(Var x, const RatFunc& value) const {
    if (!num_.uses_var(x) && !den_.uses_var(x)) return *this;
    RatFunc dn = horner(den_, x, value);
    if (dn.is_zero()) throw PoleError("ratfunc: substitution hits a pole");
    return horner(num_, x, value) / dn;
}

Rational RatFunc::eval(const std::array<Rational, kNumVars>& point) const {
    Rational d = den_.eval(point);
    if (rat_is_zero(d)) throw PoleError("ratfunc: evaluation at a pole");
    return num_.eval(point) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
    // Canonical form has no parentheses inside polynomials, so the separator is unique.
    auto pos = s.find(") / (");
    if (pos == std::string::npos) return RatFunc(Poly::parse(s));
    auto open = s.find('(');
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || open > pos)
        throw std::invalid_argument("ratfunc: cannot parse '" + s + "'");
    Poly num = Poly::parse(s.substr(open + 1, pos - open - 1));
    Poly den = Poly::parse(s.substr(pos + 5, close - pos - 5));
    return RatFunc(num, den);
}

}  // namespace pencil
