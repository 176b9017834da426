// The semi-infinite wedge space: vectors in the basis Xi_k of normalized
// semi-infinite monomials (k_j = -j eventually), decomposable vectors
// Xi[R] = prod_m (sum_l r_{ml} xi_l), the GL_infinity action and the
// long-monomial determinant picture.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "symfock/matrix.hpp"
#include "symfock/partitions.hpp"

namespace symfock {

// Finite combination of Xi_k with energies <= cutoff.
class WedgeVector {
public:
    explicit WedgeVector(int cutoff) : cutoff_(cutoff) {}
    static WedgeVector basis(const MayaIndex& k, int cutoff, const Scalar& c = Scalar(1));

    int cutoff() const { return cutoff_; }
    const std::map<MayaIndex, Scalar>& terms() const { return terms_; }
    Scalar coeff(const MayaIndex& k) const;
    bool is_zero() const { return terms_.empty(); }
    void add_term(const MayaIndex& k, const Scalar& c);  // ignored above the cutoff

    WedgeVector operator+(const WedgeVector& o) const;
    WedgeVector operator-(const WedgeVector& o) const;
    WedgeVector scaled(const Scalar& c) const;
    WedgeVector truncated(int cutoff) const;
    bool operator==(const WedgeVector& o) const { return cutoff_ == o.cutoff_ && terms_ == o.terms_; }
    bool operator!=(const WedgeVector& o) const { return !(*this == o); }

    std::string str() const;

private:
    int cutoff_;
    std::map<MayaIndex, Scalar> terms_;
};

// Orthonormal pairing of the Xi_k (coefficients treated as real).
Scalar wedge_pairing(const WedgeVector& a, const WedgeVector& b);

struct SignedMaya {
    MayaIndex index;
    int sign = 0;  // 0 when an index repeats
};
// Head of xi_{s_1} xi_{s_2} ... followed by the tail -(n+1), -(n+2), ...
SignedMaya xi_normalize(const std::vector<int>& seq);

// R = (A | 1+B): r_{ml} = delta_{l,-m} + band_{l+m} + entries(m, l), rows m >= 1.
// The band c_1, c_2, ... adds c_k at column -m+k of every row; explicit
// entries are finitely many.
struct DecomposableParams {
    std::map<std::pair<int, int>, Scalar> entries;
    std::vector<Scalar> band;

    // a_{mi}, i >= 0, from A(m-1, i); b_{mj}, j < 0, from B(m-1, -j-1).
    static DecomposableParams from_blocks(const Matrix<Scalar>& A, const Matrix<Scalar>& B);
    static DecomposableParams vacuum() { return {}; }

    Scalar r(int m, int l) const;
    void set(int m, int l, const Scalar& value);  // sets r_{ml}
    bool has_band() const;
    // Smallest N such that rows and columns beyond N are those of the identity
    // pattern (explicit entries live in rows <= N and columns >= -N).
    int support() const;
    int max_column() const;  // largest l with possibly nonzero r_{ml} in rows <= support()
    void validate() const;   // rows >= 1
};

// Finite minor of R on rows 1..N and columns k_1..k_N.
Scalar decomposable_coeff(const DecomposableParams& p, const MayaIndex& k, int N);
int stable_size(const DecomposableParams& p, const MayaIndex& k);
inline Scalar decomposable_coeff(const DecomposableParams& p, const MayaIndex& k) {
    return decomposable_coeff(p, k, stable_size(p, k));
}

WedgeVector expand_decomposable(const DecomposableParams& p, int E);
// Energy bound for all nonzero coefficients of a band-free vector.
int max_energy(const DecomposableParams& p);

// det(R1 R2^t) over the stable window; band-free only.
Scalar wedge_inner(const DecomposableParams& p1, const DecomposableParams& p2);

// (1 + D) R for D acting on rows 1..n; band-free only.
DecomposableParams premultiply(const Matrix<Scalar>& D, const DecomposableParams& p);

// Xi[A, 1+B] = det(1+B) Xi[(1+B)^-1 A, 1]; throws SingularMatrix if det(1+B) = 0.
struct CanonicalForm {
    Scalar det;
    DecomposableParams params;
};
CanonicalForm canonical_form(const DecomposableParams& p);

// GL_infinity element: h_{ij} given on the window [offset, offset + n), delta elsewhere.
struct GLElement {
    int offset = 0;
    Matrix<Scalar> h;

    static GLElement identity() { return {0, Matrix<Scalar>(0, 0)}; }
    Scalar at(int i, int j) const;
    GLElement operator*(const GLElement& o) const;
    GLElement widened(int lo, int hi) const;  // same element on the window [lo, hi)
    void validate() const;                    // square and invertible
};

// rho(H) Xi_k = sum_l det{h_{l_i k_j}} Xi_l, so that rho(H1 H2) = rho(H1) rho(H2).
Scalar gl_matrix_element(const GLElement& H, const MayaIndex& l, const MayaIndex& k);
WedgeVector gl_image(const GLElement& H, const MayaIndex& k, int E);
WedgeVector gl_action(const GLElement& H, const WedgeVector& v, int E);
// rho(H) Xi[R] = Xi[R H^t].
DecomposableParams gl_transform(const GLElement& H, const DecomposableParams& p);

// Long-monomial picture: det_{m,k <= N} (sum_l r_{ml} x_k^l), a Laurent
// polynomial in x_1..x_N times the fixed tail prod_{j>N} x_j^{-j}.
struct SkewSeries {
    int nvars = 0;
    std::map<std::vector<int>, Scalar> terms;

    bool is_antisymmetric() const;
};
SkewSeries omega_expand(const DecomposableParams& p, int N);
// Coefficients of Omega_k, read off the strictly decreasing monomials.
WedgeVector skew_to_wedge(const SkewSeries& s, int E);

}  // namespace symfock
