#include "symfock/kernelop.hpp"

#include <stdexcept>

namespace symfock {

BisymKernel::BisymKernel(int dx, int dy) : dx_(dx), dy_(dy) {
    if (dx < 0 || dy < 0) throw std::invalid_argument("negative kernel truncation");
}

Scalar BisymKernel::coeff(const Partition& m, const Partition& n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void BisymKernel::add_term(const Partition& m, const Partition& n, const Scalar& c) {
    validate_partition(m);
    validate_partition(n);
    if (weight(m) > dx_ || weight(n) > dy_)
        throw std::invalid_argument("kernel term " + partition_str(m) + partition_str(n) + " exceeds bidegree");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(PartitionPair{m, n}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

// Re-expands the coefficient array of a kernel block by block.
std::map<PartitionPair, Scalar> change_basis(const std::map<PartitionPair, Scalar>& terms, Basis fx, Basis fy,
                                             Basis tx, Basis ty) {
    if (fx == tx && fy == ty) return terms;
    std::map<std::pair<int, int>, std::vector<std::pair<PartitionPair, Scalar>>> blocks;
    for (const auto& kv : terms) blocks[{weight(kv.first.first), weight(kv.first.second)}].push_back(kv);
    std::map<PartitionPair, Scalar> out;
    for (const auto& [bd, entries] : blocks) {
        const auto& Tx = transition(bd.first, fx, tx);
        const auto& Ty = transition(bd.second, fy, ty);
        const auto& px = enumerate_partitions(bd.first);
        const auto& py = enumerate_partitions(bd.second);
        Matrix<Scalar> acc(static_cast<int>(px.size()), static_cast<int>(py.size()));
        for (const auto& [mn, c] : entries) {
            const int i = partition_index(mn.first), j = partition_index(mn.second);
            for (int a = 0; a < Tx.cols(); ++a) {
                if (sgn(Tx(i, a)) == 0) continue;
                const Scalar ca = c * Scalar(Tx(i, a));
                for (int b = 0; b < Ty.cols(); ++b)
                    if (sgn(Ty(j, b)) != 0) acc(a, b) += ca * Scalar(Ty(j, b));
            }
        }
        for (int a = 0; a < acc.rows(); ++a)
            for (int b = 0; b < acc.cols(); ++b)
                if (!acc(a, b).is_zero()) out.emplace(PartitionPair{px[a], py[b]}, acc(a, b));
    }
    return out;
}

}  // namespace

BisymKernel BisymKernel::from_expansion(Basis bx, Basis by, int dx, int dy,
                                        const std::map<PartitionPair, Scalar>& terms) {
    BisymKernel k(dx, dy);
    for (const auto& [mn, c] : change_basis(terms, bx, by, Basis::p, Basis::p)) k.add_term(mn.first, mn.second, c);
    return k;
}

BisymKernel BisymKernel::rank_one(const SymFun& fx, const SymFun& gy) {
    SymFun fp = convert(fx, Basis::p), gp = convert(gy, Basis::p);
    BisymKernel k(fx.degree(), gy.degree());
    for (const auto& [m, a] : fp.terms())
        for (const auto& [n, b] : gp.terms()) k.add_term(m, n, a * b);
    return k;
}

std::map<PartitionPair, Scalar> BisymKernel::expansion(Basis bx, Basis by) const {
    return change_basis(terms_, Basis::p, Basis::p, bx, by);
}

BisymKernel BisymKernel::operator+(const BisymKernel& o) const {
    BisymKernel r = truncated(std::min(dx_, o.dx_), std::min(dy_, o.dy_));
    for (const auto& [mn, c] : o.terms_)
        if (weight(mn.first) <= r.dx_ && weight(mn.second) <= r.dy_) r.add_term(mn.first, mn.second, c);
    return r;
}

BisymKernel BisymKernel::operator-(const BisymKernel& o) const { return *this + o.scaled(Scalar(-1)); }

BisymKernel BisymKernel::scaled(const Scalar& c) const {
    BisymKernel r(dx_, dy_);
    for (const auto& [mn, v] : terms_) r.add_term(mn.first, mn.second, c * v);
    return r;
}

BisymKernel BisymKernel::truncated(int dx, int dy) const {
    BisymKernel r(dx, dy);
    for (const auto& [mn, v] : terms_)
        if (weight(mn.first) <= dx && weight(mn.second) <= dy) r.terms_.emplace(mn, v);
    return r;
}

SymFun apply(const BisymKernel& K, const SymFun& f, const KerovWeight& w) {
    if (f.degree() > K.dy())
        throw std::invalid_argument("apply: input degree " + std::to_string(f.degree()) +
                                    " exceeds kernel y-degree " + std::to_string(K.dy()));
    SymFun fp = convert(f, Basis::p);
    std::map<Partition, Scalar> paired;  // <p_n, f> = f_n * gram(n)
    for (const auto& [n, c] : fp.terms()) paired.emplace(n, c * gram_p(n, w));
    SymFun out(Basis::p, K.dx());
    for (const auto& [mn, g] : K.terms()) {
        auto it = paired.find(mn.second);
        if (it != paired.end()) out.add_term(mn.first, g * it->second);
    }
    return convert(out, f.basis());
}

BisymKernel compose(const BisymKernel& K, const BisymKernel& L, const KerovWeight& w) {
    if (K.dy() != L.dx())
        throw std::invalid_argument("compose: inner truncations differ (" + std::to_string(K.dy()) + " vs " +
                                    std::to_string(L.dx()) + ")");
    std::map<Partition, std::vector<std::pair<Partition, Scalar>>> rows_of_L;
    for (const auto& [nk, c] : L.terms()) rows_of_L[nk.first].emplace_back(nk.second, c);
    std::map<Partition, Scalar> grams;
    BisymKernel M(K.dx(), L.dy());
    for (const auto& [mn, a] : K.terms()) {
        auto it = rows_of_L.find(mn.second);
        if (it == rows_of_L.end()) continue;
        auto g = grams.find(mn.second);
        if (g == grams.end()) g = grams.emplace(mn.second, gram_p(mn.second, w)).first;
        const Scalar ag = a * g->second;
        for (const auto& [k, b] : it->second) M.add_term(mn.first, k, ag * b);
    }
    return M;
}

Scalar matrix_element_p(const BisymKernel& K, const Partition& m, const Partition& n, const KerovWeight& w) {
    return K.coeff(m, n) * gram_p(m, w) * gram_p(n, w);
}

Scalar matrix_element_s(const BisymKernel& K, const Partition& lambda, const Partition& mu, const KerovWeight& w) {
    if (!w.is_classical()) throw std::invalid_argument("matrix_element_s requires the classical weight");
    SymFun smu = SymFun::basis_element(Basis::s, mu, K.dy());
    SymFun img = apply(K, smu, w);
    return inner_product(img, SymFun::basis_element(Basis::s, lambda, K.dx()), w);
}

BisymKernel kernel_from_matrix_elements(const std::map<PartitionPair, Scalar>& elements, int dx, int dy,
                                        const KerovWeight& w) {
    BisymKernel K(dx, dy);
    for (const auto& [mn, e] : elements) K.add_term(mn.first, mn.second, e / (gram_p(mn.first, w) * gram_p(mn.second, w)));
    return K;
}

BisymKernel identity_kernel(const KerovWeight& w, int D) {
    // exp(sum_j z_j) with z_j = p_j(x) p_j(y) / omega_j factors over j, and
    // the z_j^{m_j}/m_j! terms assemble to p_m(x) p_m(y) / gram(m).
    BisymKernel K(D, D);
    for (int d = 0; d <= D; ++d)
        for (const auto& m : enumerate_partitions(d)) K.add_term(m, m, gram_p(m, w).inverse());
    return K;
}

BisymKernel kernel_from_operator(const SymOperator& A, const KerovWeight& w, int D) {
    BisymKernel K(D, D);
    for (int d = 0; d <= D; ++d)
        for (const auto& n : enumerate_partitions(d)) {
            SymFun img = A(SymFun::basis_element(Basis::p, n, D));
            SymFun imgp = convert(img, Basis::p);
            const Scalar gn = gram_p(n, w);
            for (const auto& [m, c] : imgp.terms()) {
                if (weight(m) > D) continue;
                // <p_m, A p_n> / (gram(m) gram(n))
                const Scalar gm = gram_p(m, w);
                K.add_term(m, n, (c * gm) / (gm * gn));
            }
        }
    return K;
}

std::vector<Scalar> product_form_series(const KerovWeight& w, int order) {
    std::vector<Scalar> c(order + 1, Scalar(0));
    if (order < 0) return {};
    c[0] = Scalar(1);
    const Scalar q = Scalar::q(), t = Scalar::t();
    for (int r = 1; r <= order; ++r) {
        switch (w.family()) {
            case WeightFamily::classical: c[r] = Scalar(1); break;
            case WeightFamily::jack: {
                // (1 - z)^{-1/alpha}
                const Scalar inv_alpha = w.omega(1).inverse();
                c[r] = c[r - 1] * (inv_alpha + Scalar(r - 1)) / Scalar(r);
                break;
            }
            case WeightFamily::hall_littlewood: c[r] = Scalar(1) - t; break;
            case WeightFamily::macdonald:
                // (1 - z) F(z) = (1 - t z) F(q z)
                c[r] = c[r - 1] * (Scalar(1) - t * q.pow(r - 1)) / (Scalar(1) - q.pow(r));
                break;
            case WeightFamily::custom: throw std::invalid_argument("custom weights have no closed product form");
        }
    }
    return c;
}

FinitePolynomial evaluate_kernel_finite(const BisymKernel& K, int nx, int ny) {
    FinitePolynomial r;
    r.nvars = nx + ny;
    for (const auto& [mn, c] : K.expansion(Basis::m, Basis::m)) {
        if (static_cast<int>(mn.first.size()) > nx || static_cast<int>(mn.second.size()) > ny) continue;
        std::vector<int> a = mn.first, b = mn.second;
        a.resize(nx, 0);
        b.resize(ny, 0);
        for (const auto& pa : distinct_permutations(a))
            for (const auto& pb : distinct_permutations(b)) {
                std::vector<int> e = pa;
                e.insert(e.end(), pb.begin(), pb.end());
                r.add(e, c);
            }
    }
    return r;
}

}  // namespace symfock
