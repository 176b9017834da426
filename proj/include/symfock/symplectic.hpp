// Finite-dimensional linear relations V => W and the subspaces P[S] attached
// to Gauss parameter blocks. When the geometric forms are used, V and W
// split as V+ (+) V- and W+ (+) W-, in that coordinate order.
#pragma once

#include <optional>
#include <string>

#include "symfock/gauss.hpp"
#include "symfock/matrix.hpp"

namespace symfock {

class LinearRelation {
public:
    LinearRelation() = default;
    // Rows of `span` are vectors of V (+) W.
    LinearRelation(int dim_v, int dim_w, const Matrix<Scalar>& span);
    // Graph {v (+) M v} of M : V -> W (M has dim W rows).
    static LinearRelation graph(const Matrix<Scalar>& M);

    int dim_v() const { return dim_v_; }
    int dim_w() const { return dim_w_; }
    int dim() const { return basis_.rows(); }
    // Reduced row echelon basis; equal subspaces have equal bases.
    const Matrix<Scalar>& basis() const { return basis_; }
    bool contains(const std::vector<Scalar>& x) const;

    bool operator==(const LinearRelation& o) const {
        return dim_v_ == o.dim_v_ && dim_w_ == o.dim_w_ && basis_ == o.basis_;
    }
    bool operator!=(const LinearRelation& o) const { return !(*this == o); }

private:
    int dim_v_ = 0, dim_w_ = 0;
    Matrix<Scalar> basis_;
};

// QP = {v (+) y : v (+) w in P, w (+) y in Q for some w}; P : V => W, Q : W => Y.
LinearRelation compose_relations(const LinearRelation& Q, const LinearRelation& P);

struct KernelIndef {
    Matrix<Scalar> ker;    // rows span P n V
    Matrix<Scalar> indef;  // rows span P n W
};
KernelIndef kernel_indef(const LinearRelation& P);

// {(w+, w-) (+) (v+, v-) : v+ = A v- + B w+, w- = B^t v- + C w+}, a relation
// from the w-block to the v-block of dimension 2W. With this orientation
// P[S1] P[S2] = P[S3] whenever the kernels compose to K[S3].
LinearRelation relation_from_S(const Matrix<Scalar>& A, const Matrix<Scalar>& B, const Matrix<Scalar>& C);
inline LinearRelation relation_from_S(const GaussParams& S) { return relation_from_S(S.A, S.B, S.C); }

// Counts of positive, zero and negative squares of a symmetric rational form.
struct Inertia {
    int positive = 0, zero = 0, negative = 0;
    bool operator==(const Inertia& o) const {
        return positive == o.positive && zero == o.zero && negative == o.negative;
    }
};
Inertia inertia(const Matrix<Rational>& symmetric);

struct GeometryReport {
    bool lagrangian = false;  // isotropic for { , } and of half the ambient dimension
    // Only for plain rational relations.
    std::optional<Inertia> form_on_p, form_on_ker, form_on_indef;
    // [ , ] >= 0 on P; for P[S] this is ||S|| <= 1.
    std::optional<bool> contractive;
    // [ , ]_V positive definite on Ker; for P[S] this is ||C|| < 1.
    std::optional<bool> ker_definite;
    // [ , ]_W negative definite on Indef; for P[S] this is ||A|| < 1.
    std::optional<bool> indef_definite;
    // Hilbert-Schmidt condition; automatic on a finite window.
    bool hilbert_schmidt = true;

    std::string str() const;
};

// dim V and dim W must be even (V = V+ (+) V-).
GeometryReport check_geometry(const LinearRelation& P);

}  // namespace symfock
