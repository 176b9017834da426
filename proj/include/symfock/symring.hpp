// Degree-truncated symmetric functions in the power-sum, monomial and
// Schur bases.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "symfock/matrix.hpp"
#include "symfock/partitions.hpp"
#include "symfock/scalars.hpp"

namespace symfock {

enum class Basis { p, m, s };

char basis_char(Basis b);
Basis parse_basis(const std::string& s);

class SymFun {
public:
    SymFun(Basis b, int degree);

    static SymFun basis_element(Basis b, const Partition& lambda, int degree, Scalar c = Scalar(1));
    static SymFun constant(const Scalar& c, Basis b, int degree);
    // Degree-d component given as coefficients in enumerate_partitions(d) order.
    static SymFun from_component(Basis b, int degree, int d, const std::vector<Scalar>& coeffs);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Partition, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& lambda, const Scalar& c);
    std::vector<Scalar> component(int d) const;

    SymFun operator+(const SymFun& o) const;
    SymFun operator-(const SymFun& o) const;
    SymFun operator-() const;
    SymFun scaled(const Scalar& c) const;
    SymFun truncated(int degree) const;

    // Same truncation and equal as elements, whatever the stored bases.
    bool operator==(const SymFun& o) const;
    bool operator!=(const SymFun& o) const { return !(*this == o); }

    std::string str() const;

private:
    Basis basis_;
    int degree_;
    std::map<Partition, Scalar> terms_;
};

// Rows are source basis elements expanded in the target basis, both indexed
// by enumerate_partitions(d).
const Matrix<Rational>& transition(int d, Basis from, Basis to);

SymFun convert(const SymFun& f, Basis target);
SymFun multiply(const SymFun& f, const SymFun& g);

// Polynomial in N variables; keys are exponent vectors of length N.
struct FinitePolynomial {
    int nvars = 0;
    std::map<std::vector<int>, Scalar> terms;

    void add(const std::vector<int>& e, const Scalar& c);
    bool is_symmetric() const;
    bool operator==(const FinitePolynomial& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const FinitePolynomial& o) const { return !(*this == o); }
    std::string str() const;
};

FinitePolynomial evaluate_finite(const SymFun& f, int nvars);

// Alternant det{x_k^(lambda_j + N - j)} divided exactly by the Vandermonde.
FinitePolynomial schur_from_bialternant(const Partition& lambda, int nvars);

// Distinct rearrangements of `v` (used for monomial symmetric functions).
std::vector<std::vector<int>> distinct_permutations(std::vector<int> v);

}  // namespace symfock
