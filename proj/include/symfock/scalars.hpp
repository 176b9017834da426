// Exact coefficients: rationals and rational functions in two formal
// parameters q, t over Q.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symfock {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// Dense univariate polynomial over Q; index = exponent, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational c);
    explicit UPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& c) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder over Q.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0)=0
    UPoly monic() const;
    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Sparse polynomial in q, t. Keys are (deg_q, deg_t).
class Poly2 {
public:
    using Exp = std::pair<int, int>;
    Poly2() = default;
    explicit Poly2(const Rational& c);
    static Poly2 monomial(const Rational& c, int dq, int dt);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const std::map<Exp, Rational>& terms() const { return terms_; }
    int degree_q() const;
    int degree_t() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rational& c) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    // Exact quotient; throws if b does not divide a.
    static Poly2 exact_div(const Poly2& a, const Poly2& b);
    static Poly2 gcd(const Poly2& a, const Poly2& b);

    // Coefficient of the smallest monomial (lexicographic in (dq, dt)).
    const Rational& trailing_coeff() const { return terms_.begin()->second; }

    // Partial substitution; absent values stay formal.
    Poly2 substitute(const std::optional<Rational>& q, const std::optional<Rational>& t) const;

    std::string str() const;

private:
    void add_term(const Exp& e, const Rational& c);
    std::map<Exp, Rational> terms_;
};

// Reduced quotient num/den with den normalized so its smallest monomial has
// coefficient 1.
struct RatFunc {
    Poly2 num;
    Poly2 den;
};

class Scalar {
public:
    Scalar() : r_(0) {}
    Scalar(int v) : r_(v) {}
    Scalar(long v) : r_(v) {}
    Scalar(const Rational& v) : r_(v) { r_.canonicalize(); }
    Scalar(const Poly2& num, const Poly2& den);

    static Scalar q();
    static Scalar t();
    static Scalar parse(const std::string& s);

    bool is_plain() const { return !f_; }
    bool is_zero() const { return !f_ && sgn(r_) == 0; }
    bool is_one() const { return !f_ && r_ == 1; }
    const Rational& rational() const;  // throws unless plain
    const Poly2& numerator_poly() const;
    const Poly2& denominator_poly() const;

    Scalar add(const Scalar& o) const;
    Scalar sub(const Scalar& o) const;
    Scalar mul(const Scalar& o) const;
    Scalar div(const Scalar& o) const;
    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b) { return a.add(b); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a.sub(b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return a.mul(b); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a.div(b); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool equals(const Scalar& o) const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !a.equals(b); }

    Scalar inverse() const;
    Scalar pow(int n) const;

    std::string str() const;

private:
    static Scalar from_parts(Poly2 num, Poly2 den);
    static Scalar from_reduced(Poly2 num, Poly2 den);  // num, den already coprime
    Poly2 num_or_const() const;
    Poly2 den_or_one() const;

    Rational r_;
    std::shared_ptr<const RatFunc> f_;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Substitutes q and/or t. With both given the result is plain.
Scalar scalar_eval(const Scalar& a, const std::optional<Rational>& q_val,
                   const std::optional<Rational>& t_val);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_unit(const Scalar& s) { return !s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_unit(const Rational& r) { return sgn(r) != 0; }

// A constant tracked as sqrt(detSquare) * exp(expArg).
struct NormConstant {
    Scalar detSquare{1};
    Scalar expArg{0};

    NormConstant operator*(const NormConstant& o) const;
    bool operator==(const NormConstant& o) const {
        return detSquare == o.detSquare && expArg == o.expArg;
    }
    bool operator!=(const NormConstant& o) const { return !(*this == o); }
};

Rational factorial(int n);

}  // namespace symfock
