// Gauss vectors and Gauss kernels exp{quadratic + linear in power sums},
// their pairings and composition law. Parameters live in the
// symmetric-function gauge; the Fock gauge is the special case Omega = 1.
#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symfock/inner.hpp"
#include "symfock/kernelop.hpp"
#include "symfock/matrix.hpp"
#include "symfock/series.hpp"

namespace symfock {

// exp{1/2 p(x)A p(x) + p(x)B p(y) + 1/2 p(y)C p(y) + alpha.p(x) + beta.p(y)}
// times sqrt(detSquare) exp(expArg). All blocks are W x W; index i is p_{i+1}.
template <class T>
struct GaussData {
    Matrix<T> A, B, C;
    std::vector<T> alpha, beta;
    T detSquare = T(1);
    T expArg = T(0);

    int window() const { return A.rows(); }
};

using GaussParams = GaussData<Scalar>;

GaussParams make_gauss(int window);  // all zero, unit norm
NormConstant norm_of(const GaussParams& S);
void validate_gauss(const GaussParams& S);  // sizes, symmetry, detSquare != 0
GaussParams padded(const GaussParams& S, int window);
bool operator==(const GaussParams& a, const GaussParams& b);

template <class T>
Matrix<T> lift(const Matrix<Scalar>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = T(m(i, j));
    return r;
}

// ---------------------------------------------------------------- expansion

namespace detail {

inline Partition merged(const Partition& a, const Partition& b) {
    Partition r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<int>());
    return r;
}

}  // namespace detail

// Coefficients of p_m(x) p_n(y) in the exponential (norm not applied), via
// E_k = (1/k) sum_j j Q_j E_{k-j} for the grading by total weight.
template <class T>
std::map<PartitionPair, T> gauss_kernel_terms(const GaussData<T>& S, int dx, int dy) {
    struct Mono {
        Partition x, y;
        int wt;
        T c;
    };
    std::vector<Mono> q;
    const int W = S.window();
    auto push = [&](Partition x, Partition y, const T& c) {
        if (is_zero(c)) return;
        if (weight(x) > dx || weight(y) > dy) return;
        const int wt = weight(x) + weight(y);
        q.push_back({std::move(x), std::move(y), wt, c});
    };
    for (int i = 0; i < W; ++i)
        for (int j = i; j < W; ++j) {
            Partition pij = {j + 1, i + 1};
            if (i == j) {
                push(pij, {}, S.A(i, i) / T(2));
                push({}, pij, S.C(i, i) / T(2));
            } else {
                push(pij, {}, S.A(i, j));
                push({}, pij, S.C(i, j));
            }
        }
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) push({i + 1}, {j + 1}, S.B(i, j));
    for (int i = 0; i < W && i < static_cast<int>(S.alpha.size()); ++i) push({i + 1}, {}, S.alpha[i]);
    for (int j = 0; j < W && j < static_cast<int>(S.beta.size()); ++j) push({}, {j + 1}, S.beta[j]);

    const int K = dx + dy;
    std::vector<std::map<PartitionPair, T>> E(K + 1);
    E[0][{Partition{}, Partition{}}] = T(1);
    for (int k = 1; k <= K; ++k) {
        auto& out = E[k];
        for (const auto& mono : q) {
            if (mono.wt > k) continue;
            const T f = T(mono.wt) * mono.c;
            for (const auto& [mn, v] : E[k - mono.wt]) {
                if (weight(mn.first) + weight(mono.x) > dx || weight(mn.second) + weight(mono.y) > dy) continue;
                PartitionPair key{detail::merged(mn.first, mono.x), detail::merged(mn.second, mono.y)};
                auto it = out.find(key);
                if (it == out.end()) out.emplace(std::move(key), f * v);
                else it->second = it->second + f * v;
            }
        }
        const T inv = T(1) / T(k);
        for (auto it = out.begin(); it != out.end();) {
            it->second = it->second * inv;
            if (is_zero(it->second)) it = out.erase(it);
            else ++it;
        }
    }
    std::map<PartitionPair, T> all;
    for (auto& level : E)
        for (auto& kv : level) all.insert(std::move(kv));
    return all;
}

// ---------------------------------------------------------------- composition

// Parameters of K1 o K2 (kernel of A_{K1} A_{K2}). Throws SingularMatrix when
// Omega^{-1} - C Omega U is not invertible.
template <class T>
GaussData<T> gauss_compose_t(const GaussData<T>& S1, const GaussData<T>& S2, const Matrix<T>& Omega) {
    const int W = S1.window();
    if (S2.window() != W || Omega.rows() != W) throw std::invalid_argument("gauss_compose: window mismatch");
    const auto& A = S1.A;
    const auto& B = S1.B;
    const auto& C = S1.C;
    const auto& U = S2.A;
    const auto& V = S2.B;
    const auto& Wb = S2.C;
    Matrix<T> Oinv(W, W);
    for (int i = 0; i < W; ++i) Oinv(i, i) = T(1) / Omega(i, i);
    const Matrix<T> CO = C * Omega, UO = U * Omega, OC = Omega * C;
    const Matrix<T> X = inverse(Oinv - CO * U);  // (Omega^-1 - C Omega U)^-1
    const Matrix<T> Y = inverse(Oinv - UO * C);  // (Omega^-1 - U Omega C)^-1
    const Matrix<T> Bt = transpose(B), Vt = transpose(V);

    auto row = [W](const std::vector<T>& v) {
        Matrix<T> r(1, W);
        for (int i = 0; i < W && i < static_cast<int>(v.size()); ++i) r(0, i) = v[i];
        return r;
    };
    auto unrow = [W](const Matrix<T>& m) {
        std::vector<T> v(W);
        for (int i = 0; i < W; ++i) v[i] = m(0, i);
        return v;
    };
    const Matrix<T> al = row(S1.alpha), be = row(S1.beta), al2 = row(S2.alpha), be2 = row(S2.beta);

    GaussData<T> R;
    R.A = A + B * Omega * U * X * Bt;
    R.B = B * Y * V;
    R.C = Wb + Vt * X * CO * V;
    R.alpha = unrow(al + (be * Omega * U + al2) * X * Bt);
    R.beta = unrow(be2 + (be + al2 * OC) * Y * V);
    const Matrix<T> q = be * Omega * U * X * transpose(be) + scale(T(2), be * Y * transpose(al2)) +
                        al2 * OC * Y * transpose(al2);
    R.expArg = S1.expArg + S2.expArg + q(0, 0) / T(2);
    const Matrix<T> one = Matrix<T>::identity(W);
    R.detSquare = S1.detSquare * S2.detSquare / det(one - CO * UO);
    return R;
}

GaussParams gauss_compose(const GaussParams& S1, const GaussParams& S2, const KerovWeight& w);
GaussParams gauss_compose_fock(const GaussParams& S1, const GaussParams& S2);

// ---------------------------------------------------------------- vectors

SymFun psi_vector(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, int D);

// <Psi[A|alpha], Psi[B|beta]> = sqrt(detSquare) exp(expArg) with
// detSquare = det(1 - A Omega B Omega)^{-1} and
// expArg = 1/2 (alpha beta) [[-A, Omega^-1], [Omega^-1, -B]]^{-1} (alpha beta)^t.
template <class T>
std::pair<T, T> psi_inner_t(const Matrix<T>& A, const std::vector<T>& alpha, const Matrix<T>& B,
                            const std::vector<T>& beta, const Matrix<T>& Omega) {
    const int W = A.rows();
    Matrix<T> Oinv(W, W);
    for (int i = 0; i < W; ++i) Oinv(i, i) = T(1) / Omega(i, i);
    const T dsq = T(1) / det(Matrix<T>::identity(W) - A * Omega * B * Omega);
    Matrix<T> M = block2x2(-A, Oinv, Oinv, -B);
    Matrix<T> Minv = inverse(M);
    Matrix<T> v(1, 2 * W);
    for (int i = 0; i < W; ++i) {
        if (i < static_cast<int>(alpha.size())) v(0, i) = alpha[i];
        if (i < static_cast<int>(beta.size())) v(0, W + i) = beta[i];
    }
    const T e = (v * Minv * transpose(v))(0, 0) / T(2);
    return {dsq, e};
}

NormConstant psi_inner(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, const Matrix<Scalar>& B,
                       const std::vector<Scalar>& beta, const KerovWeight& w);

// ---------------------------------------------------------------- kernels

BisymKernel gauss_kernel(const GaussParams& S, int dx, int dy);
inline BisymKernel gauss_kernel(const GaussParams& S, int D) { return gauss_kernel(S, D, D); }

// (0, Omega^{-1}, 0) with linear parts a, b.
GaussParams heisenberg_params(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const KerovWeight& w);

struct HeisenbergProduct {
    std::vector<Scalar> a, b;
    NormConstant norm;
};
HeisenbergProduct heisenberg_compose(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                     const std::vector<Scalar>& a2, const std::vector<Scalar>& b2,
                                     const KerovWeight& w);

// g = [[P, Q], [conj Q, conj P]] over plain rationals (conjugation trivial).
bool is_symplectic_block(const Matrix<Scalar>& P, const Matrix<Scalar>& Q);
// Fock-gauge parameters (Q P^-1, (P^t)^-1, -P^-1 Q).
GaussParams weil_params(const Matrix<Scalar>& P, const Matrix<Scalar>& Q);

// Sufficient test that Omega^{1/2} S Omega^{1/2} has norm < 1, by Gershgorin
// discs of the similar matrix S Omega. Empty when data are not plain.
std::optional<bool> advisory_bounded(const GaussParams& S, const KerovWeight& w);

}  // namespace symfock
