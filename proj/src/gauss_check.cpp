#include "symfock/gauss_check.hpp"

#include <set>

namespace symfock {

namespace {

using SS = Series<Scalar>;

SS mono(const Scalar& c, int k, int order) { return SS::monomial(c, k, order); }

// Scales entry (i, j) by s^{ei*(i+1) + ej*(j+1)}.
Matrix<SS> graded(const Matrix<Scalar>& m, int ei, int ej, int order) {
    Matrix<SS> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = mono(m(i, j), ei * (i + 1) + ej * (j + 1), order);
    return r;
}

std::vector<SS> graded(const std::vector<Scalar>& v, int e, int order) {
    std::vector<SS> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = mono(v[i], e * static_cast<int>(i + 1), order);
    return r;
}

SymFun homogeneous_part(const SymFun& f, int d) {
    SymFun r(f.basis(), f.degree());
    for (const auto& [lam, c] : f.terms())
        if (weight(lam) == d) r.add_term(lam, c);
    return r;
}

SS prefactor(const SS& dsq, const SS& arg, int order) {
    return series_sqrt(dsq.truncated(order)) * series_exp(arg.truncated(order));
}

}  // namespace

CheckResult check_gauss_compose(const GaussParams& S1in, const GaussParams& S2in, const KerovWeight& w, int D) {
    const int W = std::max(S1in.window(), S2in.window());
    GaussParams S1 = padded(S1in, W), S2 = padded(S2in, W);
    S1.detSquare = S2.detSquare = Scalar(1);
    S1.expArg = S2.expArg = Scalar(0);
    const int N = 2 * D + 1;

    GaussData<SS> G1, G2;
    G1.A = graded(S1.A, 0, 0, N);
    G1.B = graded(S1.B, 0, 1, N);
    G1.C = graded(S1.C, 1, 1, N);
    G1.alpha = graded(S1.alpha, 0, N);
    G1.beta = graded(S1.beta, 1, N);
    G2.A = graded(S2.A, 1, 1, N);
    G2.B = graded(S2.B, 1, 0, N);
    G2.C = graded(S2.C, 0, 0, N);
    G2.alpha = graded(S2.alpha, 1, N);
    G2.beta = graded(S2.beta, 0, N);

    GaussData<SS> R = gauss_compose_t(G1, G2, lift<SS>(w.omega_matrix(W)));
    const SS pre = prefactor(R.detSquare, R.expArg, N);
    R.detSquare = SS(1);
    R.expArg = SS(0);
    auto rhs = gauss_kernel_terms(R, D, D);

    const BisymKernel K1 = gauss_kernel(S1, D, D), K2 = gauss_kernel(S2, D, D);
    std::vector<BisymKernel> lhs;
    for (int d = 0; d <= D; ++d) {
        BisymKernel K1d(D, D);
        for (const auto& [mn, c] : K1.terms())
            if (weight(mn.second) == d) K1d.add_term(mn.first, mn.second, c);
        lhs.push_back(compose(K1d, K2, w));
    }

    std::set<PartitionPair> keys;
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const auto& K : lhs)
        for (const auto& [k, v] : K.terms()) keys.insert(k);

    CheckResult res;
    for (const auto& key : keys) {
        auto it = rhs.find(key);
        const SS r = it == rhs.end() ? SS(0) : it->second * pre;
        for (int j = 0; j < N; ++j) {
            const Scalar want = j % 2 == 0 ? lhs[j / 2].coeff(key.first, key.second) : Scalar(0);
            if (r.coeff(j) != want) {
                res.ok = false;
                res.detail = "mismatch at p" + partition_str(key.first) + " p" + partition_str(key.second) +
                             ", inner degree " + (j % 2 ? "odd " + std::to_string(j) : std::to_string(j / 2)) +
                             ": kernel product " + want.str() + ", closed form " + r.coeff(j).str();
                return res;
            }
        }
    }
    return res;
}

CheckResult check_psi_inner(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, const Matrix<Scalar>& B,
                            const std::vector<Scalar>& beta, const KerovWeight& w, int D) {
    const int W = std::max({A.rows(), B.rows(), static_cast<int>(alpha.size()), static_cast<int>(beta.size())});
    const int N = D + 1;
    std::vector<Scalar> a = alpha, b = beta;
    a.resize(W, Scalar(0));
    b.resize(W, Scalar(0));
    auto [dsq, e] = psi_inner_t(graded(resized(A, W, W), 1, 1, N), graded(a, 1, N),
                                lift<SS>(resized(B, W, W)), graded(b, 0, N), lift<SS>(w.omega_matrix(W)));
    const SS closed = prefactor(dsq, e, N);
    const SymFun f = psi_vector(resized(A, W, W), a, D), g = psi_vector(resized(B, W, W), b, D);
    CheckResult res;
    for (int d = 0; d <= D; ++d) {
        const Scalar pair = inner_product(homogeneous_part(f, d), homogeneous_part(g, d), w);
        if (pair != closed.coeff(d)) {
            res.ok = false;
            res.detail = "degree " + std::to_string(d) + ": expansion " + pair.str() + ", closed form " +
                         closed.coeff(d).str();
            return res;
        }
    }
    return res;
}

}  // namespace symfock
