#include "pencil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pencil {

int grlex_cmp(const Exp& a, const Exp& b) {
    long da = 0, db = 0;
    for (int i = 0; i < kNumVars; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const { return grlex_cmp(a, b) > 0; }
};

Exp exp_zero() {
    Exp e{};
    e.fill(0);
    return e;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kNumVars; ++i) {
        unsigned s = unsigned(a[i]) + unsigned(b[i]);
        if (s > 0xffffu) throw std::overflow_error("poly: exponent overflow");
        r[i] = std::uint16_t(s);
    }
    return r;
}

bool exp_divides(const Exp& d, const Exp& n) {
    for (int i = 0; i < kNumVars; ++i)
        if (d[i] > n[i]) return false;
    return true;
}

Exp exp_sub(const Exp& n, const Exp& d) {
    Exp r;
    for (int i = 0; i < kNumVars; ++i) r[i] = std::uint16_t(n[i] - d[i]);
    return r;
}

}  // namespace

void Poly::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.e, b.e) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& tm : t_) {
        if (!out.empty() && out.back().e == tm.e)
            out.back().c += tm.c;
        else
            out.push_back(tm);
        if (!out.empty() && rat_is_zero(out.back().c)) out.pop_back();
    }
    t_ = std::move(out);
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!rat_is_zero(c)) p.t_.push_back({exp_zero(), c});
    return p;
}

Poly Poly::variable(Var v, unsigned exp) {
    if (exp == 0) return one();
    Exp e = exp_zero();
    e[static_cast<int>(v)] = std::uint16_t(exp);
    Poly p;
    p.t_.push_back({e, Rational(1)});
    return p;
}

Poly Poly::monomial(const Exp& e, const Rational& c) {
    Poly p;
    if (!rat_is_zero(c)) p.t_.push_back({e, c});
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].e == exp_zero());
}

bool Poly::is_one() const {
    return t_.size() == 1 && t_[0].e == exp_zero() && t_[0].c == 1;
}

Rational Poly::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("poly: constant_value on non-constant");
    return t_[0].c;
}

bool Poly::uses_var(Var v) const {
    for (auto& tm : t_)
        if (tm.e[static_cast<int>(v)] > 0) return true;
    return false;
}

int Poly::degree(Var v) const {
    int d = -1;
    for (auto& tm : t_) d = std::max(d, int(tm.e[static_cast<int>(v)]));
    return d;
}

int Poly::total_degree() const {
    if (t_.empty()) return -1;
    // Leading term has maximal total degree under grlex.
    long d = 0;
    for (int i = 0; i < kNumVars; ++i) d += t_[0].e[i];
    return int(d);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& tm : r.t_) tm.c = -tm.c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        int cmp;
        if (i == t_.size())
            cmp = -1;
        else if (j == o.t_.size())
            cmp = 1;
        else
            cmp = grlex_cmp(t_[i].e, o.t_[j].e);
        if (cmp > 0)
            out.push_back(t_[i++]);
        else if (cmp < 0)
            out.push_back(o.t_[j++]);
        else {
            Rational c = t_[i].c + o.t_[j].c;
            if (!rat_is_zero(c)) out.push_back({t_[i].e, c});
            ++i, ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    // Fast paths for scalar and monomial factors keep numeric workloads cheap.
    if (a.is_constant()) {
        Poly r = b;
        return r *= a.constant_value();
    }
    if (b.is_constant()) {
        Poly r = a;
        return r *= b.constant_value();
    }
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const Poly& mono = a.t_.size() == 1 ? a : b;
        const Poly& many = a.t_.size() == 1 ? b : a;
        Poly r;
        r.t_.reserve(many.t_.size());
        for (auto& tm : many.t_)
            r.t_.push_back({exp_add(tm.e, mono.t_[0].e), tm.c * mono.t_[0].c});
        return r;  // monomial multiple preserves grlex order
    }
    std::map<Exp, Rational, GrlexGreater> acc;
    for (auto& ta : a.t_)
        for (auto& tb : b.t_) {
            Exp e = exp_add(ta.e, tb.e);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ta.c * tb.c);
            else
                it->second += ta.c * tb.c;
        }
    Poly r;
    r.t_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!rat_is_zero(c)) r.t_.push_back({e, c});
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (rat_is_zero(c)) {
        t_.clear();
        return *this;
    }
    for (auto& tm : t_) tm.c *= c;
    return *this;
}

Poly Poly::pow(unsigned n) const {
    Poly r = one();
    Poly base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

const Poly::Term& Poly::leading_term() const {
    if (t_.empty()) throw std::logic_error("poly: leading_term of zero");
    return t_[0];
}

std::vector<Poly> Poly::coeffs_in(Var x) const {
    int d = degree(x);
    std::vector<Poly> cs(std::size_t(std::max(d, -1) + 1));
    int xi = static_cast<int>(x);
    for (auto& tm : t_) {
        Exp e = tm.e;
        int k = e[xi];
        e[xi] = 0;
        cs[std::size_t(k)] += monomial(e, tm.c);
    }
    return cs;
}

Poly Poly::from_coeffs(Var x, const std::vector<Poly>& cs) {
    Poly r;
    for (std::size_t d = 0; d < cs.size(); ++d) r += cs[d] * variable(x, unsigned(d));
    return r;
}

Rational Poly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational acc(0);
    for (auto& tm : t_) {
        Rational m = tm.c;
        for (int i = 0; i < kNumVars; ++i)
            for (int k = 0; k < tm.e[i]; ++k) m *= point[std::size_t(i)];
        acc += m;
    }
    return acc;
}

Poly Poly::subs(Var x, const Rational& val) const {
    Poly r;
    int xi = static_cast<int>(x);
    for (auto& tm : t_) {
        Rational c = tm.c;
        for (int k = 0; k < tm.e[xi]; ++k) c *= val;
        Exp e = tm.e;
        e[xi] = 0;
        r += monomial(e, c);
    }
    return r;
}

Rational Poly::content_and_sign() const {
    if (t_.empty()) return Rational(0);
    Rational g(0);
    for (auto& tm : t_) {
        g = rat_content_gcd(g, tm.c);
        if (g == 1) break;
    }
    if (sgn(t_[0].c) < 0) g = -g;
    return g;
}

Poly Poly::primitive_part() const {
    if (t_.empty()) return Poly();
    Rational c = content_and_sign();
    Poly r = *this;
    for (auto& tm : r.t_) tm.c /= c;
    return r;
}

std::optional<Poly> Poly::try_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) {
        Poly r = a;
        Rational inv = Rational(1) / b.constant_value();
        return r *= inv;
    }
    // Multivariate exact division in the grlex order: if b | a then at each step
    // the leading term of the remainder is divisible by lt(b).
    Poly r = a, q;
    const Term& lb = b.t_[0];
    while (!r.is_zero()) {
        const Term& lr = r.t_[0];
        if (!exp_divides(lb.e, lr.e)) return std::nullopt;
        Poly m = monomial(exp_sub(lr.e, lb.e), lr.c / lb.c);
        q += m;
        r -= m * b;
    }
    return q;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    auto q = try_div(a, b);
    if (!q) throw std::domain_error("poly: inexact division");
    return *q;
}

namespace {

// --- gcd machinery (content/primitive-part recursion + subresultant PRS) ---

int deg_of(const std::vector<Poly>& p) { return int(p.size()) - 1; }

void trim(std::vector<Poly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<Poly> mul_coeff(const std::vector<Poly>& p, const Poly& c) {
    std::vector<Poly> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
    trim(r);
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all in x-free coefficients.
std::vector<Poly> prem(std::vector<Poly> r, const std::vector<Poly>& b) {
    int db = deg_of(b);
    const Poly& lb = b[std::size_t(db)];
    int e = deg_of(r) - db + 1;
    while (!r.empty() && deg_of(r) >= db) {
        int k = deg_of(r) - db;
        Poly lr = r.back();
        r = mul_coeff(r, lb);
        for (int i = 0; i <= db; ++i) r[std::size_t(i + k)] -= lr * b[std::size_t(i)];
        trim(r);
        --e;
    }
    while (e-- > 0) r = mul_coeff(r, lb);
    return r;
}

Poly content_in(const std::vector<Poly>& p) {
    Poly g;
    for (auto& c : p) {
        g = Poly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return one();
    if (a == b) return a.primitive_part();
    // Monomial fast path: exponent-wise minimum.
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const Poly& mono = a.t_.size() == 1 ? a : b;
        const Poly& other = a.t_.size() == 1 ? b : a;
        Exp e = mono.t_[0].e;
        for (auto& tm : other.t_)
            for (int i = 0; i < kNumVars; ++i) e[i] = std::min(e[i], tm.e[i]);
        return monomial(e, Rational(1));
    }
    // Main variable: first variable used by both (they share one whenever the gcd
    // can be non-trivial in it; otherwise strip it via contents).
    int xi = -1;
    for (int i = 0; i < kNumVars && xi < 0; ++i) {
        Var v = static_cast<Var>(i);
        bool ua = a.uses_var(v), ub = b.uses_var(v);
        if (ua && ub) xi = i;
        if (ua != ub) {
            // gcd(a, b) = gcd(content of the one using v, the other).
            const Poly& with = ua ? a : b;
            const Poly& without = ua ? b : a;
            return gcd(content_in(with.coeffs_in(v)), without);
        }
    }
    if (xi < 0) return one();  // both constant; handled above, defensive
    Var x = static_cast<Var>(xi);

    std::vector<Poly> A = a.coeffs_in(x), B = b.coeffs_in(x);
    Poly ca = content_in(A), cb = content_in(B);
    for (auto& c : A) c = divexact(c, ca);
    for (auto& c : B) c = divexact(c, cb);
    Poly cont = gcd(ca, cb);

    if (deg_of(A) < deg_of(B)) std::swap(A, B);
    // Subresultant polynomial remainder sequence (Brown/Collins).
    Poly g = one(), h = one();
    while (true) {
        int d = deg_of(A) - deg_of(B);
        std::vector<Poly> R = prem(A, B);
        if (R.empty()) break;
        if (deg_of(R) == 0) return cont;  // gcd is free of x
        Poly divisor = g * h.pow(unsigned(d));
        A = std::move(B);
        B.assign(R.size(), Poly());
        for (std::size_t i = 0; i < R.size(); ++i) B[i] = divexact(R[i], divisor);
        g = A[std::size_t(deg_of(A))];
        if (d > 0) h = divexact(g.pow(unsigned(d)), h.pow(unsigned(d - 1)));
    }
    // Primitive part of the last nonzero remainder w.r.t. x.
    Poly cB = content_in(B);
    for (auto& c : B) c = divexact(c, cB);
    Poly gx = from_coeffs(x, B);
    return (cont * gx).primitive_part();
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& tm : t_) {
        Rational c = tm.c;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool has_vars = !(tm.e == Exp{});
        if (!has_vars || c != 1) {
            os << rat_to_string(c);
            if (has_vars) os << "*";
        }
        bool started = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (tm.e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << var_name(static_cast<Var>(i));
            if (tm.e[i] > 1) os << "^" << tm.e[i];
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
    std::string number() {  // digits[/digits]
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '/') {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        return s.substr(start, i - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return s.substr(start, i - start);
    }
};

std::optional<Var> var_by_name(const std::string& n) {
    for (int i = 0; i < kNumVars; ++i)
        if (n == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    return std::nullopt;
}

}  // namespace

Poly Poly::parse(const std::string& s) {
    Lexer lx(s);
    Poly result;
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (expect_term) {
                sign = (c == '-') ? -sign : sign;
            } else {
                sign = (c == '-') ? -1 : 1;
                expect_term = true;
            }
            continue;
        }
        // One term: factors joined by '*'.
        Rational coef(sign);
        Exp e{};
        e.fill(0);
        bool more = true;
        bool any = false;
        while (more) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coef *= rat_from_string(lx.number());
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = lx.ident();
                auto v = var_by_name(name);
                if (!v) throw std::invalid_argument("poly: unknown variable '" + name + "'");
                unsigned exp = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    std::string n = lx.number();
                    if (n.empty()) throw std::invalid_argument("poly: bad exponent");
                    exp = unsigned(std::stoul(n));
                }
                unsigned cur = e[static_cast<int>(*v)];
                if (cur + exp > 0xffffu) throw std::overflow_error("poly: exponent overflow");
                e[static_cast<int>(*v)] = std::uint16_t(cur + exp);
                any = true;
            } else {
                throw std::invalid_argument(std::string("poly: unexpected character '") + p +
                                            "' in '" + s + "'");
            }
            if (lx.peek() == '*') {
                lx.get();
            } else {
                more = false;
            }
        }
        if (!any) throw std::invalid_argument("poly: empty term in '" + s + "'");
        result += monomial(e, coef);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !result.is_zero())
        throw std::invalid_argument("poly: dangling sign in '" + s + "'");
    return result;
}

}  // namespace pencil
