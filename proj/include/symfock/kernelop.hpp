// Bisymmetric kernels K(x, y) and the operators they define through a
// Kerov scalar product in the y variables.
#pragma once

#include <functional>
#include <map>
#include <utility>

#include "symfock/inner.hpp"
#include "symfock/symring.hpp"

namespace symfock {

using PartitionPair = std::pair<Partition, Partition>;

// Stored as sum gamma_{m,n} p_m(x) p_n(y) with |m| <= dx, |n| <= dy.
class BisymKernel {
public:
    BisymKernel(int dx, int dy);

    // Kernel given in another basis pair, re-expanded in p (x) p.
    static BisymKernel from_expansion(Basis bx, Basis by, int dx, int dy,
                                      const std::map<PartitionPair, Scalar>& terms);
    static BisymKernel rank_one(const SymFun& fx, const SymFun& gy);

    int dx() const { return dx_; }
    int dy() const { return dy_; }
    const std::map<PartitionPair, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Partition& m, const Partition& n) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Partition& m, const Partition& n, const Scalar& c);

    std::map<PartitionPair, Scalar> expansion(Basis bx, Basis by) const;

    BisymKernel operator+(const BisymKernel& o) const;
    BisymKernel operator-(const BisymKernel& o) const;
    BisymKernel scaled(const Scalar& c) const;
    BisymKernel truncated(int dx, int dy) const;
    bool operator==(const BisymKernel& o) const { return dx_ == o.dx_ && dy_ == o.dy_ && terms_ == o.terms_; }
    bool operator!=(const BisymKernel& o) const { return !(*this == o); }

private:
    int dx_, dy_;
    std::map<PartitionPair, Scalar> terms_;
};

// (A_K f)(x) = <K(x, .), f>_omega, returned in the basis of f.
SymFun apply(const BisymKernel& K, const SymFun& f, const KerovWeight& w);

// M(x, z) = <K(x, .), L(., z)>_omega; requires K.dy() == L.dx().
BisymKernel compose(const BisymKernel& K, const BisymKernel& L, const KerovWeight& w);

// <A_K p_n, p_m>_omega
Scalar matrix_element_p(const BisymKernel& K, const Partition& m, const Partition& n, const KerovWeight& w);
// <A_K s_mu, s_lambda> for the classical product.
Scalar matrix_element_s(const BisymKernel& K, const Partition& lambda, const Partition& mu, const KerovWeight& w);

// Rebuilds a kernel from all its p-basis matrix elements.
BisymKernel kernel_from_matrix_elements(const std::map<PartitionPair, Scalar>& elements, int dx, int dy,
                                        const KerovWeight& w);

// exp(sum_j p_j(x) p_j(y) / omega_j) up to bidegree (D, D).
BisymKernel identity_kernel(const KerovWeight& w, int D);

// Pairs the operator between two copies of the identity kernel.
using SymOperator = std::function<SymFun(const SymFun&)>;
BisymKernel kernel_from_operator(const SymOperator& A, const KerovWeight& w, int D);

// Coefficients c_r of F(z) = sum c_r z^r with prod_{k,l} F(x_k y_l) the
// closed product form of the identity kernel; custom weights have none.
std::vector<Scalar> product_form_series(const KerovWeight& w, int order);

// K evaluated at x_1..x_nx, y_1..y_ny; exponent vectors list x's then y's.
FinitePolynomial evaluate_kernel_finite(const BisymKernel& K, int nx, int ny);

}  // namespace symfock
