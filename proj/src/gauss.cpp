#include "symfock/gauss.hpp"

#include <stdexcept>

namespace symfock {

GaussParams make_gauss(int window) {
    GaussParams S;
    S.A = Matrix<Scalar>(window, window);
    S.B = Matrix<Scalar>(window, window);
    S.C = Matrix<Scalar>(window, window);
    S.alpha.assign(window, Scalar(0));
    S.beta.assign(window, Scalar(0));
    return S;
}

NormConstant norm_of(const GaussParams& S) { return NormConstant{S.detSquare, S.expArg}; }

void validate_gauss(const GaussParams& S) {
    const int W = S.window();
    if (S.A.cols() != W) throw std::invalid_argument("A must be square");
    if (S.B.rows() != W || S.B.cols() != W) throw std::invalid_argument("B must match the window of A");
    if (S.C.rows() != W || S.C.cols() != W) throw std::invalid_argument("C must match the window of A");
    if (!is_symmetric(S.A)) throw std::invalid_argument("A must be symmetric");
    if (!is_symmetric(S.C)) throw std::invalid_argument("C must be symmetric");
    if (static_cast<int>(S.alpha.size()) > W) throw std::invalid_argument("alpha longer than the window");
    if (static_cast<int>(S.beta.size()) > W) throw std::invalid_argument("beta longer than the window");
    if (S.detSquare.is_zero()) throw std::invalid_argument("normDetSquare must be nonzero");
}

GaussParams padded(const GaussParams& S, int window) {
    if (window < S.window()) throw std::invalid_argument("cannot shrink a Gauss window");
    GaussParams R = S;
    R.A = resized(S.A, window, window);
    R.B = resized(S.B, window, window);
    R.C = resized(S.C, window, window);
    R.alpha.resize(window, Scalar(0));
    R.beta.resize(window, Scalar(0));
    return R;
}

bool operator==(const GaussParams& a, const GaussParams& b) {
    const int W = std::max(a.window(), b.window());
    GaussParams x = padded(a, W), y = padded(b, W);
    return x.A == y.A && x.B == y.B && x.C == y.C && x.alpha == y.alpha && x.beta == y.beta &&
           x.detSquare == y.detSquare && x.expArg == y.expArg;
}

GaussParams gauss_compose(const GaussParams& S1, const GaussParams& S2, const KerovWeight& w) {
    validate_gauss(S1);
    validate_gauss(S2);
    const int W = std::max(S1.window(), S2.window());
    try {
        return gauss_compose_t(padded(S1, W), padded(S2, W), w.omega_matrix(W));
    } catch (const std::domain_error&) {
        throw SingularMatrix("gauss_compose: Omega^-1 - C Omega U is singular; the product leaves the Gauss semigroup");
    }
}

GaussParams gauss_compose_fock(const GaussParams& S1, const GaussParams& S2) {
    validate_gauss(S1);
    validate_gauss(S2);
    const int W = std::max(S1.window(), S2.window());
    try {
        return gauss_compose_t(padded(S1, W), padded(S2, W), Matrix<Scalar>::identity(W));
    } catch (const std::domain_error&) {
        throw SingularMatrix("gauss_compose: 1 - C U is singular; the product leaves the Gauss semigroup");
    }
}

SymFun psi_vector(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, int D) {
    if (!is_symmetric(A)) throw std::invalid_argument("psi_vector: A must be symmetric");
    GaussParams S = make_gauss(std::max<int>(A.rows(), alpha.size()));
    S.A = resized(A, S.window(), S.window());
    for (size_t i = 0; i < alpha.size(); ++i) S.alpha[i] = alpha[i];
    SymFun f(Basis::p, D);
    for (const auto& [mn, c] : gauss_kernel_terms(S, D, 0)) f.add_term(mn.first, c);
    return f;
}

NormConstant psi_inner(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, const Matrix<Scalar>& B,
                       const std::vector<Scalar>& beta, const KerovWeight& w) {
    const int W = std::max({A.rows(), B.rows(), static_cast<int>(alpha.size()), static_cast<int>(beta.size())});
    if (!is_symmetric(A) || !is_symmetric(B)) throw std::invalid_argument("psi_inner: A and B must be symmetric");
    std::vector<Scalar> a = alpha, b = beta;
    a.resize(W, Scalar(0));
    b.resize(W, Scalar(0));
    try {
        auto [dsq, e] = psi_inner_t(resized(A, W, W), a, resized(B, W, W), b, w.omega_matrix(W));
        return NormConstant{dsq, e};
    } catch (const std::domain_error&) {
        throw SingularMatrix("psi_inner: 1 - A Omega B Omega is singular");
    }
}

BisymKernel gauss_kernel(const GaussParams& S, int dx, int dy) {
    validate_gauss(S);
    BisymKernel K(dx, dy);
    for (const auto& [mn, c] : gauss_kernel_terms(S, dx, dy)) K.add_term(mn.first, mn.second, c);
    return K;
}

GaussParams heisenberg_params(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const KerovWeight& w) {
    const int W = std::max<int>(a.size(), b.size());
    GaussParams S = make_gauss(W);
    for (int i = 0; i < W; ++i) S.B(i, i) = w.omega(i + 1).inverse();
    for (size_t i = 0; i < a.size(); ++i) S.alpha[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) S.beta[i] = b[i];
    return S;
}

HeisenbergProduct heisenberg_compose(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                     const std::vector<Scalar>& a2, const std::vector<Scalar>& b2,
                                     const KerovWeight& w) {
    const size_t W = std::max({a.size(), b.size(), a2.size(), b2.size()});
    HeisenbergProduct r;
    r.a.assign(W, Scalar(0));
    r.b.assign(W, Scalar(0));
    Scalar e(0);
    auto at = [](const std::vector<Scalar>& v, size_t i) { return i < v.size() ? v[i] : Scalar(0); };
    for (size_t j = 0; j < W; ++j) {
        r.a[j] = at(a, j) + at(a2, j);
        r.b[j] = at(b, j) + at(b2, j);
        e += w.omega(static_cast<int>(j) + 1) * at(b, j) * at(a2, j);
    }
    r.norm = NormConstant{Scalar(1), e};
    return r;
}

bool is_symplectic_block(const Matrix<Scalar>& P, const Matrix<Scalar>& Q) {
    const int n = P.rows();
    if (P.cols() != n || Q.rows() != n || Q.cols() != n) return false;
    Matrix<Scalar> g = block2x2(P, Q, Q, P);
    Matrix<Scalar> zero(n, n), one = Matrix<Scalar>::identity(n);
    Matrix<Scalar> J = block2x2(zero, one, -one, zero);
    Matrix<Scalar> H = block2x2(one, zero, zero, -one);
    return g * J * transpose(g) == J && g * H * transpose(g) == H;
}

GaussParams weil_params(const Matrix<Scalar>& P, const Matrix<Scalar>& Q) {
    const int n = P.rows();
    if (P.cols() != n || Q.rows() != n || Q.cols() != n) throw std::invalid_argument("weil_params: P, Q must be square of equal size");
    Matrix<Scalar> Pinv;
    try {
        Pinv = inverse(P);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("weil_params: P is singular");
    }
    GaussParams S = make_gauss(n);
    S.A = Q * Pinv;
    S.B = transpose(Pinv);
    S.C = -(Pinv * Q);
    return S;
}

std::optional<bool> advisory_bounded(const GaussParams& S, const KerovWeight& w) {
    const int W = S.window();
    Matrix<Scalar> full = block2x2(S.A, S.B, transpose(S.B), S.C);
    for (int i = 0; i < 2 * W; ++i) {
        Rational row = 0;
        for (int j = 0; j < 2 * W; ++j) {
            const Scalar om = w.omega(j % W + 1);
            if (!full(i, j).is_plain() || !om.is_plain()) return std::nullopt;
            if (sgn(om.rational()) <= 0) return std::nullopt;
            row += abs(full(i, j).rational() * om.rational());
        }
        if (row >= 1) return false;
    }
    return true;
}

}  // namespace symfock
