#include "symfock/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symfock {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    if (t.front() == '+') t.erase(0, 1);
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0)))
            throw std::invalid_argument("malformed rational '" + s + "'");
    }
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
    if (t.find('/') != std::string::npos && sgn(r.get_den()) == 0)
        throw DivisionByZero("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational c) {
    if (sgn(c) != 0) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& c) const {
    if (sgn(c) == 0) return {};
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= c;
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    std::vector<Rational> r = a.c_;
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        Rational f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / lead());
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational UPoly::eval(const Rational& x) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

// ---------------------------------------------------------------- Poly2

namespace {

// Polynomial in q with coefficients in Q[t]; index = q-degree.
using QPoly = std::vector<UPoly>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly to_qpoly(const Poly2& p) {
    QPoly out(p.is_zero() ? 0 : p.degree_q() + 1);
    std::vector<std::vector<Rational>> dense(out.size());
    for (const auto& [e, c] : p.terms()) {
        auto& row = dense[e.first];
        if (static_cast<int>(row.size()) <= e.second) row.resize(e.second + 1);
        row[e.second] = c;
    }
    for (size_t i = 0; i < out.size(); ++i) out[i] = UPoly(std::move(dense[i]));
    return out;
}

Poly2 from_qpoly(const QPoly& p) {
    Poly2 out;
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& cs = p[i].coeffs();
        for (size_t j = 0; j < cs.size(); ++j)
            if (sgn(cs[j]) != 0)
                out = out + Poly2::monomial(cs[j], static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

UPoly content(const QPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        g = UPoly::gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

QPoly div_coeffs(const QPoly& p, const UPoly& d) {
    QPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        auto [q, r] = UPoly::divmod(p[i], d);
        if (!r.is_zero()) throw std::logic_error("content division not exact");
        out[i] = std::move(q);
    }
    return out;
}

QPoly primitive_part(const QPoly& p) {
    UPoly c = content(p);
    return div_coeffs(p, c);
}

// Pseudo-remainder of a by b in Q[t][q].
QPoly prem(QPoly a, const QPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lc = b.back();
    int e = static_cast<int>(a.size()) - 1 - db + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        UPoly la = a.back();
        for (auto& c : a) c = c * lc;
        for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
        trim(a);
        --e;
    }
    for (; e > 0; --e)
        for (auto& c : a) c = c * lc;
    return a;
}

}  // namespace

Poly2::Poly2(const Rational& c) {
    if (sgn(c) != 0) terms_[{0, 0}] = c;
}

Poly2 Poly2::monomial(const Rational& c, int dq, int dt) {
    Poly2 p;
    if (sgn(c) != 0) p.terms_[{dq, dt}] = c;
    return p;
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Rational Poly2::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int Poly2::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

void Poly2::add_term(const Exp& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, ins] = terms_.emplace(e, c);
    if (!ins) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
}

Poly2 Poly2::operator*(const Rational& c) const {
    if (sgn(c) == 0) return {};
    Poly2 r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

Poly2 Poly2::exact_div(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (b.is_constant()) return a * (Rational(1) / b.constant_term());
    QPoly r = to_qpoly(a);
    const QPoly d = to_qpoly(b);
    const int db = static_cast<int>(d.size()) - 1;
    QPoly q(std::max<int>(0, static_cast<int>(r.size()) - db));
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        const int dr = static_cast<int>(r.size()) - 1;
        auto [f, rem] = UPoly::divmod(r.back(), d.back());
        if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
        q[dr - db] = f;
        for (int j = 0; j <= db; ++j) r[dr - db + j] = r[dr - db + j] - f * d[j];
        trim(r);
    }
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    trim(q);
    return from_qpoly(q);
}

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly2(1);
    QPoly A = to_qpoly(a), B = to_qpoly(b);
    UPoly ca = content(A), cb = content(B);
    UPoly gc = UPoly::gcd(ca, cb);
    A = div_coeffs(A, ca);
    B = div_coeffs(B, cb);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        QPoly R = prem(A, B);
        A = std::move(B);
        if (R.empty())
            B.clear();
        else
            B = primitive_part(R);
    }
    for (auto& c : A) c = c * gc;
    return from_qpoly(A);
}

Poly2 Poly2::substitute(const std::optional<Rational>& q, const std::optional<Rational>& t) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        int dq = e.first, dt = e.second;
        if (q) {
            Rational p = 1;
            for (int i = 0; i < dq; ++i) p *= *q;
            v *= p;
            dq = 0;
        }
        if (t) {
            Rational p = 1;
            for (int i = 0; i < dt; ++i) p *= *t;
            v *= p;
            dt = 0;
        }
        r.add_term({dq, dt}, v);
    }
    return r;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exp, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx < dy;
        return x.first.first > y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto var = [&](const char* v, int d) {
            if (d == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (d > 1) mono += "^" + std::to_string(d);
        };
        var("q", e.first);
        var("t", e.second);
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Poly2& num, const Poly2& den) { *this = from_parts(num, den); }

Scalar Scalar::from_parts(Poly2 num, Poly2 den) {
    if (den.is_zero()) throw DivisionByZero("division by zero");
    if (num.is_zero()) return Scalar();
    if (!den.is_constant()) {
        Poly2 g = Poly2::gcd(num, den);
        if (!g.is_constant()) {
            num = Poly2::exact_div(num, g);
            den = Poly2::exact_div(den, g);
        }
    }
    Rational c = Rational(1) / den.trailing_coeff();
    if (c != 1) {
        num = num * c;
        den = den * c;
    }
    Scalar s;
    if (den.is_constant() && num.is_constant()) {
        s.r_ = num.constant_term();
        return s;
    }
    s.f_ = std::make_shared<const RatFunc>(RatFunc{std::move(num), std::move(den)});
    return s;
}

Scalar Scalar::q() { return from_parts(Poly2::monomial(1, 1, 0), Poly2(1)); }
Scalar Scalar::t() { return from_parts(Poly2::monomial(1, 0, 1), Poly2(1)); }

const Rational& Scalar::rational() const {
    if (f_) throw std::logic_error("scalar is not a plain rational: " + str());
    return r_;
}

Poly2 Scalar::num_or_const() const { return f_ ? f_->num : Poly2(r_); }
Poly2 Scalar::den_or_one() const { return f_ ? f_->den : Poly2(1); }

const Poly2& Scalar::numerator_poly() const {
    if (!f_) throw std::logic_error("plain scalar has no polynomial parts");
    return f_->num;
}

const Poly2& Scalar::denominator_poly() const {
    if (!f_) throw std::logic_error("plain scalar has no polynomial parts");
    return f_->den;
}

Scalar Scalar::add(const Scalar& o) const {
    if (!f_ && !o.f_) return Scalar(r_ + o.r_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly2 a = num_or_const(), b = den_or_one(), c = o.num_or_const(), d = o.den_or_one();
    if (b == d) return from_parts(a + c, b);
    // b = g b', d = g d' with both inputs reduced: only g can share a factor
    // with a d' + c b'.
    Poly2 g = Poly2::gcd(b, d);
    if (g.is_constant()) return from_reduced(a * d + c * b, b * d);
    Poly2 b1 = Poly2::exact_div(b, g), d1 = Poly2::exact_div(d, g);
    Poly2 num = a * d1 + c * b1;
    if (num.is_zero()) return Scalar();
    Poly2 h = Poly2::gcd(num, g);
    if (!h.is_constant()) {
        num = Poly2::exact_div(num, h);
        g = Poly2::exact_div(g, h);
    }
    return from_reduced(std::move(num), g * b1 * d1);
}

Scalar Scalar::sub(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (!f_) {
        s.r_ = -r_;
        return s;
    }
    s.f_ = std::make_shared<const RatFunc>(RatFunc{-f_->num, f_->den});
    return s;
}

Scalar Scalar::mul(const Scalar& o) const {
    if (!f_ && !o.f_) return Scalar(r_ * o.r_);
    if (is_zero() || o.is_zero()) return Scalar();
    if (!f_) {
        Scalar s = o;
        s.f_ = std::make_shared<const RatFunc>(RatFunc{o.f_->num * r_, o.f_->den});
        return s;
    }
    if (!o.f_) return o * *this;
    Poly2 a = f_->num, b = f_->den, c = o.f_->num, d = o.f_->den;
    Poly2 g1 = Poly2::gcd(a, d), g2 = Poly2::gcd(c, b);
    if (!g1.is_constant()) {
        a = Poly2::exact_div(a, g1);
        d = Poly2::exact_div(d, g1);
    }
    if (!g2.is_constant()) {
        c = Poly2::exact_div(c, g2);
        b = Poly2::exact_div(b, g2);
    }
    return from_reduced(a * c, b * d);
}

Scalar Scalar::from_reduced(Poly2 num, Poly2 den) {
    if (num.is_zero()) return Scalar();
    Rational k = Rational(1) / den.trailing_coeff();
    if (k != 1) {
        num = num * k;
        den = den * k;
    }
    Scalar s;
    if (den.is_constant() && num.is_constant()) {
        s.r_ = num.constant_term();
        return s;
    }
    s.f_ = std::make_shared<const RatFunc>(RatFunc{std::move(num), std::move(den)});
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero");
    if (!f_) return Scalar(Rational(1) / r_);
    return from_reduced(f_->den, f_->num);
}

Scalar Scalar::div(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (!f_ && !o.f_) return Scalar(r_ / o.r_);
    return *this * o.inverse();
}

bool Scalar::equals(const Scalar& o) const {
    if (!f_ && !o.f_) return r_ == o.r_;
    if (!f_ || !o.f_) return false;
    return f_->num == o.f_->num && f_->den == o.f_->den;
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::string Scalar::str() const {
    if (!f_) return r_.get_str();
    auto wrap = [](const Poly2& p) {
        std::string s = p.str();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (f_->den.is_constant()) return f_->num.str();
    return wrap(f_->num) + "/" + wrap(f_->den);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::logic_error("unknown op");
}

Scalar scalar_eval(const Scalar& a, const std::optional<Rational>& q_val,
                   const std::optional<Rational>& t_val) {
    if (a.is_plain()) return a;
    Poly2 den = a.denominator_poly().substitute(q_val, t_val);
    if (den.is_zero()) throw DivisionByZero("denominator vanishes at the substituted values");
    Poly2 num = a.numerator_poly().substitute(q_val, t_val);
    return Scalar(num, den);
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar '" + s_ + "': " + what + " at offset " +
                                    std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 't' || c == '(';
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                Scalar d = unary();
                if (d.is_zero()) throw DivisionByZero("division by zero in '" + s_ + "'");
                v /= d;
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    Scalar power() {
        Scalar b = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected exponent");
            int e = std::stoi(s_.substr(st, pos_ - st));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    Scalar primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (c == 't') {
            ++pos_;
            return Scalar::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(s_.substr(st, pos_ - st))));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& s) { return Parser(s).parse(); }

NormConstant NormConstant::operator*(const NormConstant& o) const {
    return {detSquare * o.detSquare, expArg + o.expArg};
}

}  // namespace symfock
