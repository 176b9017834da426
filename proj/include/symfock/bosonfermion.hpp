// The dictionary between classical symmetric functions and the wedge space:
// f -> Delta f, preimages of decomposable vectors, the GL_infinity action on
// symmetric functions, multiplicative vectors and the two inversion formulas.
// Classical scalar product only.
#pragma once

#include <map>
#include <vector>

#include "symfock/kernelop.hpp"
#include "symfock/wedge.hpp"

namespace symfock {

// Polynomials in z_1, z_2, ...; a monomial prod_i z_{lambda_i} is keyed by the
// partition lambda, so the weighted degree of a monomial is |lambda|.
struct ZPoly {
    std::map<Partition, Rational> terms;

    static ZPoly constant(const Rational& c);
    static ZPoly variable(int j, const Rational& c = Rational(1));
    Rational coeff(const Partition& mono) const;
    bool is_zero() const { return terms.empty(); }
    void add(const Partition& mono, const Rational& c);

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly truncated(int degree) const;
    bool operator==(const ZPoly& o) const { return terms == o.terms; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }
    std::string str() const;
};
ZPoly multiply(const ZPoly& a, const ZPoly& b, int degree);  // drops weighted degree > degree
ZPoly negate_variables(const ZPoly& a);                      // z_j -> -z_j

// R_n(z) from the multinomial sum; R_0 = 1 and R_n = 0 for n < 0.
ZPoly r_poly(int n);
// Q_{mn}(z) for m + n + 1 <= degree, from (exp{sum z_j (x^j - y^j)} - 1) / (x - y).
std::vector<std::vector<ZPoly>> q_poly_table(int degree);

// Determinant over a truncated polynomial ring, by dynamic programming over
// the set of used columns.
ZPoly zpoly_det(const std::vector<std::vector<ZPoly>>& M, int degree);

// z_j -> p_j / j, the square-root-free form of the Fock-space dictionary.
SymFun zpoly_to_sym(const ZPoly& f, int degree);

// s_lambda -> Xi_{maya(lambda)}.
WedgeVector delta_times(const SymFun& f, int E);
// The inverse read-off: Xi_k -> s_{partition(k)}, degrees <= D.
SymFun wedge_to_sym(const WedgeVector& g, int D);

// Pi[A, 1+B] in the Schur basis, minors taken at the size N (N > window).
SymFun pi_vector(const DecomposableParams& p, int D);
SymFun pi_vector_at(const DecomposableParams& p, int D, int N);
int pi_window(const DecomposableParams& p, int D);
// Checks Pi|_{x_{N+1} = ... = 0} * prod_{p<q}(x_p - x_q) = prod x_p^N det{r_m(x_p)}
// up to the degree where f is known.
bool pi_restriction_holds(const SymFun& f, const DecomposableParams& p, int N);

// Schur-basis matrix elements det{h_{i_a j_b}} at the minor size N.
std::map<PartitionPair, Scalar> glinf_minors(const GLElement& H, int dx, int dy, int N);
int glinf_window(const GLElement& H, int dx, int dy);
BisymKernel glinf_kernel(const GLElement& H, int dx, int dy);
inline BisymKernel glinf_kernel(const GLElement& H, int D) { return glinf_kernel(H, D, D); }
SymFun glinf_apply(const GLElement& H, const SymFun& f, int D);
// Largest energy increase of rho(H) on any basis vector.
int gl_energy_shift(const GLElement& H);

// r = (1, r_1, r_2, ...). R = prod_k r(x_k) as a symmetric function.
SymFun multiplicative_vector(const std::vector<Scalar>& r, int D);
WedgeVector mult_vector_image(const std::vector<Scalar>& r, int E);

// zeta[a][b] for a + b + 1 <= cutoff: (r(x)/r(u) - 1)/(x - u) = sum zeta_ab x^a u^b.
using ZetaArray = std::vector<std::vector<Scalar>>;
ZetaArray zeta_coeffs(const std::vector<Scalar>& r, int cutoff);
// Rows xi_{-m} + sum_j zeta_{j (m-1)} xi_j, entries with m + j <= cutoff.
DecomposableParams zeta_params(const ZetaArray& z);
WedgeVector zeta_image(const std::vector<Scalar>& r, int E);

// Recover f from g = delta_times(f) by pairing with the images of the
// coherent-state vectors; rows built from R_n (first) or Q_{mn} (second).
SymFun bf_inverse(const WedgeVector& g, int D);
SymFun bf_inverse_q(const WedgeVector& g, int D);

}  // namespace symfock
