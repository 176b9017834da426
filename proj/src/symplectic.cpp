#include "symfock/symplectic.hpp"

#include <sstream>
#include <stdexcept>

namespace symfock {

LinearRelation::LinearRelation(int dim_v, int dim_w, const Matrix<Scalar>& span) : dim_v_(dim_v), dim_w_(dim_w) {
    if (dim_v < 0 || dim_w < 0) throw std::invalid_argument("negative dimension");
    if (span.rows() > 0 && span.cols() != dim_v + dim_w)
        throw std::invalid_argument("spanning vectors must have length dim V + dim W");
    basis_ = span.rows() ? rref(span) : Matrix<Scalar>(0, dim_v + dim_w);
}

LinearRelation LinearRelation::graph(const Matrix<Scalar>& M) {
    const int n = M.cols(), m = M.rows();
    Matrix<Scalar> span(n, n + m);
    for (int k = 0; k < n; ++k) {
        span(k, k) = 1;
        for (int i = 0; i < m; ++i) span(k, n + i) = M(i, k);
    }
    return LinearRelation(n, m, span);
}

bool LinearRelation::contains(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != dim_v_ + dim_w_) return false;
    Matrix<Scalar> ext = resized(basis_, basis_.rows() + 1, basis_.cols());
    for (int j = 0; j < basis_.cols(); ++j) ext(basis_.rows(), j) = x[j];
    return rank(ext) == basis_.rows();
}

LinearRelation compose_relations(const LinearRelation& Q, const LinearRelation& P) {
    if (P.dim_w() != Q.dim_v())
        throw std::invalid_argument("compose_relations: middle dimensions differ (" + std::to_string(P.dim_w()) +
                                    " vs " + std::to_string(Q.dim_v()) + ")");
    const int nv = P.dim_v(), nw = P.dim_w(), ny = Q.dim_w();
    const auto& bp = P.basis();
    const auto& bq = Q.basis();
    const int a = bp.rows(), b = bq.rows();
    // sum_i x_i w(p_i) - sum_j y_j w(q_j) = 0
    Matrix<Scalar> eq(nw, a + b);
    for (int k = 0; k < nw; ++k) {
        for (int i = 0; i < a; ++i) eq(k, i) = bp(i, nv + k);
        for (int j = 0; j < b; ++j) eq(k, a + j) = -bq(j, k);
    }
    Matrix<Scalar> sol = nullspace(eq);
    Matrix<Scalar> span(sol.cols(), nv + ny);
    for (int s = 0; s < sol.cols(); ++s) {
        for (int i = 0; i < a; ++i) {
            if (is_zero(sol(i, s))) continue;
            for (int k = 0; k < nv; ++k) span(s, k) += sol(i, s) * bp(i, k);
        }
        for (int j = 0; j < b; ++j) {
            if (is_zero(sol(a + j, s))) continue;
            for (int k = 0; k < ny; ++k) span(s, nv + k) += sol(a + j, s) * bq(j, nw + k);
        }
    }
    return LinearRelation(nv, ny, span);
}

namespace {

// Rows of the basis combined by the null vectors of the selected columns.
Matrix<Scalar> intersect(const Matrix<Scalar>& basis, int zero_from, int zero_count, int keep_from, int keep_count) {
    Matrix<Scalar> eq(zero_count, basis.rows());
    for (int k = 0; k < zero_count; ++k)
        for (int i = 0; i < basis.rows(); ++i) eq(k, i) = basis(i, zero_from + k);
    Matrix<Scalar> sol = nullspace(eq);
    Matrix<Scalar> out(sol.cols(), keep_count);
    for (int s = 0; s < sol.cols(); ++s)
        for (int i = 0; i < basis.rows(); ++i) {
            if (is_zero(sol(i, s))) continue;
            for (int k = 0; k < keep_count; ++k) out(s, k) += sol(i, s) * basis(i, keep_from + k);
        }
    return out.rows() ? rref(out) : out;
}

}  // namespace

KernelIndef kernel_indef(const LinearRelation& P) {
    const int nv = P.dim_v(), nw = P.dim_w();
    return {intersect(P.basis(), nv, nw, 0, nv), intersect(P.basis(), 0, nv, nv, nw)};
}

LinearRelation relation_from_S(const Matrix<Scalar>& A, const Matrix<Scalar>& B, const Matrix<Scalar>& C) {
    const int W = A.rows();
    if (A.cols() != W || B.rows() != W || B.cols() != W || C.rows() != W || C.cols() != W)
        throw std::invalid_argument("relation_from_S: blocks must be W x W");
    // columns (w+, w-, v+, v-); free coordinates x = (v-, w+), (v+, w-) = S x
    Matrix<Scalar> S = block2x2(A, B, transpose(B), C);
    Matrix<Scalar> span(2 * W, 4 * W);
    for (int k = 0; k < 2 * W; ++k) {
        const int free_col = k < W ? 3 * W + k : k - W;
        span(k, free_col) = 1;
        for (int i = 0; i < W; ++i) {
            span(k, 2 * W + i) = S(i, k);  // v+
            span(k, W + i) = S(W + i, k);  // w-
        }
    }
    return LinearRelation(2 * W, 2 * W, span);
}

Inertia inertia(const Matrix<Rational>& symmetric) {
    Matrix<Rational> a = symmetric;
    int n = a.rows();
    Inertia r;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && sgn(a(i, i)) != 0) p = i;
        if (p < 0) {
            // all remaining diagonal entries vanish; a nonzero a(i,j) lets row/column i += j
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && sgn(a(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) break;
            for (int k = 0; k < n; ++k) a(pi, k) += a(pj, k);
            for (int k = 0; k < n; ++k) a(k, pi) += a(k, pj);
            p = pi;
        }
        done[p] = true;
        const Rational d = a(p, p);
        if (sgn(d) > 0) ++r.positive;
        else ++r.negative;
        for (int i = 0; i < n; ++i) {
            if (done[i] || sgn(a(i, p)) == 0) continue;
            const Rational f = a(i, p) / d;
            for (int j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
        }
        for (int j = 0; j < n; ++j)
            if (!done[j]) a(p, j) = 0;
        for (int i = 0; i < n; ++i)
            if (!done[i]) a(i, p) = 0;
    }
    r.zero = n - r.positive - r.negative;
    return r;
}

namespace {

// Gram matrix of sum_j (x+ y+ - x- y-) over coordinate halves of length h.
std::optional<Matrix<Rational>> hermitian_gram(const Matrix<Scalar>& rows, int offset, int h, int sign,
                                               const Matrix<Scalar>* rows2 = nullptr, int offset2 = 0, int h2 = 0) {
    const int n = rows.rows();
    Matrix<Rational> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational acc = 0;
            auto add_block = [&](const Matrix<Scalar>& m, int off, int len, int sg) -> bool {
                for (int k = 0; k < len; ++k) {
                    const Scalar& x1 = m(i, off + k);
                    const Scalar& y1 = m(j, off + k);
                    const Scalar& x2 = m(i, off + len + k);
                    const Scalar& y2 = m(j, off + len + k);
                    if (!x1.is_plain() || !y1.is_plain() || !x2.is_plain() || !y2.is_plain()) return false;
                    acc += sg * (x1.rational() * y1.rational() - x2.rational() * y2.rational());
                }
                return true;
            };
            if (!add_block(rows, offset, h, sign)) return std::nullopt;
            if (rows2 && !add_block(*rows2, offset2, h2, -sign)) return std::nullopt;
            g(i, j) = acc;
        }
    return g;
}

}  // namespace

GeometryReport check_geometry(const LinearRelation& P) {
    if (P.dim_v() % 2 || P.dim_w() % 2) throw std::invalid_argument("check_geometry: dim V and dim W must be even");
    const int hv = P.dim_v() / 2, hw = P.dim_w() / 2;
    const auto& b = P.basis();
    GeometryReport rep;

    // {x, y} = sum (x+ y- - x- y+) on V minus the same on W
    bool iso = true;
    for (int i = 0; i < b.rows() && iso; ++i)
        for (int j = i + 1; j < b.rows() && iso; ++j) {
            Scalar s(0);
            for (int k = 0; k < hv; ++k) s += b(i, k) * b(j, hv + k) - b(i, hv + k) * b(j, k);
            const int o = P.dim_v();
            for (int k = 0; k < hw; ++k) s -= b(i, o + k) * b(j, o + hw + k) - b(i, o + hw + k) * b(j, o + k);
            if (!s.is_zero()) iso = false;
        }
    rep.lagrangian = iso && 2 * P.dim() == P.dim_v() + P.dim_w();

    // [x, y] on V (+) W: the V-part taken from columns [0, dim V), W-part from [dim V, ...).
    if (auto g = hermitian_gram(b, 0, hv, 1, &b, P.dim_v(), hw)) {
        rep.form_on_p = inertia(*g);
        rep.contractive = rep.form_on_p->negative == 0;
    }
    KernelIndef ki = kernel_indef(P);
    if (auto g = hermitian_gram(ki.ker, 0, hv, 1)) {
        rep.form_on_ker = inertia(*g);
        rep.ker_definite = rep.form_on_ker->positive == ki.ker.rows();
    }
    if (auto g = hermitian_gram(ki.indef, 0, hw, 1)) {
        rep.form_on_indef = inertia(*g);
        rep.indef_definite = rep.form_on_indef->negative == ki.indef.rows();
    }
    return rep;
}

std::string GeometryReport::str() const {
    std::ostringstream os;
    auto yn = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
    auto in = [](const std::optional<Inertia>& i) {
        if (!i) return std::string("n/a");
        return "(+" + std::to_string(i->positive) + ", 0:" + std::to_string(i->zero) + ", -" +
               std::to_string(i->negative) + ")";
    };
    os << "lagrangian: " << (lagrangian ? "yes" : "no") << "\n"
       << "contractive ([,] >= 0 on P): " << yn(contractive) << " inertia " << in(form_on_p) << "\n"
       << "ker definite ([,]_V > 0 on Ker): " << yn(ker_definite) << " inertia " << in(form_on_ker) << "\n"
       << "indef definite ([,]_W < 0 on Indef): " << yn(indef_definite) << " inertia " << in(form_on_indef) << "\n"
       << "hilbert-schmidt: yes (finite window)\n";
    return os.str();
}

}  // namespace symfock
