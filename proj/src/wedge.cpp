#include "symfock/wedge.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symfock {

namespace {

int energy_of(const MayaIndex& k) { return k.energy(); }

std::string maya_str(const MayaIndex& k) {
    std::string s = "Xi[";
    for (size_t i = 0; i < k.head.size(); ++i) s += (i ? "," : "") + std::to_string(k.head[i]);
    return s + "]";
}

// All size-n subsets of a sorted descending list, each returned descending.
void subsets(const std::vector<int>& pool, int n, size_t start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
        if (pool.size() - i < static_cast<size_t>(n) - cur.size()) break;
        cur.push_back(pool[i]);
        subsets(pool, n, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------- vectors

WedgeVector WedgeVector::basis(const MayaIndex& k, int cutoff, const Scalar& c) {
    WedgeVector v(cutoff);
    v.add_term(k, c);
    return v;
}

Scalar WedgeVector::coeff(const MayaIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void WedgeVector::add_term(const MayaIndex& k, const Scalar& c) {
    if (c.is_zero() || energy_of(k) > cutoff_) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

WedgeVector WedgeVector::operator+(const WedgeVector& o) const {
    WedgeVector r = truncated(std::min(cutoff_, o.cutoff_));
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

WedgeVector WedgeVector::operator-(const WedgeVector& o) const { return *this + o.scaled(Scalar(-1)); }

WedgeVector WedgeVector::scaled(const Scalar& c) const {
    WedgeVector r(cutoff_);
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

WedgeVector WedgeVector::truncated(int cutoff) const {
    WedgeVector r(cutoff);
    for (const auto& [k, v] : terms_) r.add_term(k, v);
    return r;
}

std::string WedgeVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << maya_str(k);
    }
    return os.str();
}

Scalar wedge_pairing(const WedgeVector& a, const WedgeVector& b) {
    Scalar r(0);
    for (const auto& [k, c] : a.terms()) {
        auto it = b.terms().find(k);
        if (it != b.terms().end()) r += c * it->second;
    }
    return r;
}

SignedMaya xi_normalize(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size());
    int lowest = 0;
    for (int s : seq) lowest = std::min(lowest, s);
    // extend with tail entries until every later tail entry is below all of seq
    std::vector<int> full = seq;
    for (int j = n + 1; j <= std::max(n, -lowest); ++j) full.push_back(-j);
    int sign = 1;
    // insertion sort descending, counting transpositions
    for (size_t i = 1; i < full.size(); ++i)
        for (size_t j = i; j > 0 && full[j - 1] < full[j]; --j) {
            std::swap(full[j - 1], full[j]);
            sign = -sign;
        }
    for (size_t i = 1; i < full.size(); ++i)
        if (full[i] == full[i - 1]) return {MayaIndex{}, 0};
    return {normalize_maya(full), sign};
}

// ---------------------------------------------------------------- decomposable vectors

DecomposableParams DecomposableParams::from_blocks(const Matrix<Scalar>& A, const Matrix<Scalar>& B) {
    DecomposableParams p;
    for (int m = 0; m < A.rows(); ++m)
        for (int i = 0; i < A.cols(); ++i)
            if (!A(m, i).is_zero()) p.entries[{m + 1, i}] = A(m, i);
    for (int m = 0; m < B.rows(); ++m)
        for (int j = 0; j < B.cols(); ++j)
            if (!B(m, j).is_zero()) p.entries[{m + 1, -j - 1}] = B(m, j);
    return p;
}

Scalar DecomposableParams::r(int m, int l) const {
    Scalar v = l == -m ? Scalar(1) : Scalar(0);
    const int k = l + m;
    if (k >= 1 && k <= static_cast<int>(band.size())) v += band[k - 1];
    auto it = entries.find({m, l});
    if (it != entries.end()) v += it->second;
    return v;
}

void DecomposableParams::set(int m, int l, const Scalar& value) {
    if (m < 1) throw std::invalid_argument("decomposable rows start at 1");
    entries.erase({m, l});
    Scalar d = value - r(m, l);
    if (!d.is_zero()) entries[{m, l}] = d;
}

bool DecomposableParams::has_band() const {
    return std::any_of(band.begin(), band.end(), [](const Scalar& c) { return !c.is_zero(); });
}

int DecomposableParams::support() const {
    int n = 0;
    for (const auto& [ml, c] : entries) {
        n = std::max(n, ml.first);
        if (ml.second < 0) n = std::max(n, -ml.second);
    }
    return n;
}

int DecomposableParams::max_column() const {
    int hi = -1;
    for (const auto& [ml, c] : entries) hi = std::max(hi, ml.second);
    for (int k = static_cast<int>(band.size()); k >= 1; --k)
        if (!band[k - 1].is_zero()) {
            hi = std::max(hi, k - 1);
            break;
        }
    return hi;
}

void DecomposableParams::validate() const {
    for (const auto& [ml, c] : entries)
        if (ml.first < 1) throw std::invalid_argument("decomposable rows start at 1");
}

int stable_size(const DecomposableParams& p, const MayaIndex& k) {
    return std::max(p.support(), static_cast<int>(k.head.size()));
}

Scalar decomposable_coeff(const DecomposableParams& p, const MayaIndex& k, int N) {
    if (N < static_cast<int>(k.head.size())) throw std::invalid_argument("decomposable_coeff: window shorter than the Maya head");
    Matrix<Scalar> M(N, N);
    for (int m = 1; m <= N; ++m)
        for (int j = 1; j <= N; ++j) M(m - 1, j - 1) = p.r(m, k.at(j));
    return det(M);
}

WedgeVector expand_decomposable(const DecomposableParams& p, int E) {
    p.validate();
    WedgeVector v(E);
    for (int n = 0; n <= E; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            MayaIndex k = partition_to_maya(lam);
            v.add_term(k, decomposable_coeff(p, k));
        }
    return v;
}

int max_energy(const DecomposableParams& p) {
    if (p.has_band()) throw std::invalid_argument("max_energy: banded vectors have unbounded energy");
    const int I = p.max_column();
    return I < 0 ? 0 : p.support() * (I + 1);
}

Scalar wedge_inner(const DecomposableParams& p1, const DecomposableParams& p2) {
    if (p1.has_band() || p2.has_band()) throw std::invalid_argument("wedge_inner: needs finite support");
    const int N = std::max(p1.support(), p2.support());
    const int I = std::max(p1.max_column(), p2.max_column());
    Matrix<Scalar> G(N, N);
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n) {
            Scalar s(0);
            for (int l = -N; l <= I; ++l) {
                const Scalar a = p1.r(m, l);
                if (a.is_zero()) continue;
                s += a * p2.r(n, l);
            }
            G(m - 1, n - 1) = s;
        }
    return det(G);
}

DecomposableParams premultiply(const Matrix<Scalar>& D, const DecomposableParams& p) {
    if (p.has_band()) throw std::invalid_argument("premultiply: needs finite support");
    if (D.rows() != D.cols()) throw std::invalid_argument("premultiply: D must be square");
    const int n = D.rows();
    const int N = std::max(p.support(), n);
    const int I = p.max_column();
    DecomposableParams out = p;
    for (int m = 1; m <= n; ++m)
        for (int l = -N; l <= I; ++l) {
            Scalar v = p.r(m, l);
            for (int k = 1; k <= n; ++k)
                if (!D(m - 1, k - 1).is_zero()) v += D(m - 1, k - 1) * p.r(k, l);
            out.set(m, l, v);
        }
    return out;
}

CanonicalForm canonical_form(const DecomposableParams& p) {
    if (p.has_band()) throw std::invalid_argument("canonical_form: needs finite support");
    const int N = p.support();
    const int I = p.max_column();
    Matrix<Scalar> oneB(N, N), A(N, std::max(I + 1, 0));
    for (int m = 1; m <= N; ++m) {
        for (int n = 1; n <= N; ++n) oneB(m - 1, n - 1) = p.r(m, -n);
        for (int i = 0; i <= I; ++i) A(m - 1, i) = p.r(m, i);
    }
    CanonicalForm cf;
    cf.det = det(oneB);
    if (cf.det.is_zero()) throw SingularMatrix("canonical_form: det(1+B) = 0");
    Matrix<Scalar> D = inverse(oneB) * A;
    cf.params = DecomposableParams::from_blocks(D, Matrix<Scalar>(0, 0));
    return cf;
}

// ---------------------------------------------------------------- GL action

Scalar GLElement::at(int i, int j) const {
    const int n = h.rows();
    if (i >= offset && i < offset + n && j >= offset && j < offset + n) return h(i - offset, j - offset);
    return i == j ? Scalar(1) : Scalar(0);
}

GLElement GLElement::widened(int lo, int hi) const {
    GLElement g{lo, Matrix<Scalar>(hi - lo, hi - lo)};
    for (int i = lo; i < hi; ++i)
        for (int j = lo; j < hi; ++j) g.h(i - lo, j - lo) = at(i, j);
    return g;
}

GLElement GLElement::operator*(const GLElement& o) const {
    const int lo = std::min(h.rows() ? offset : o.offset, o.h.rows() ? o.offset : offset);
    const int hi = std::max(offset + h.rows(), o.offset + o.h.rows());
    if (hi <= lo) return identity();
    GLElement a = widened(lo, hi), b = o.widened(lo, hi);
    return {lo, a.h * b.h};
}

void GLElement::validate() const {
    if (h.rows() != h.cols()) throw std::invalid_argument("GL element window must be square");
    if (h.rows() && det(h).is_zero()) throw SingularMatrix("GL element is not invertible");
}

namespace {

int gl_size(const GLElement& H, const MayaIndex& l, const MayaIndex& k) {
    int N = std::max(l.head.size(), k.head.size());
    if (H.h.rows()) N = std::max(N, -H.offset);
    return std::max(N, 0);
}

}  // namespace

Scalar gl_matrix_element(const GLElement& H, const MayaIndex& l, const MayaIndex& k) {
    const int N = gl_size(H, l, k);
    Matrix<Scalar> M(N, N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) M(i - 1, j - 1) = H.at(l.at(i), k.at(j));
    return det(M);
}

WedgeVector gl_image(const GLElement& H, const MayaIndex& k, int E) {
    const int N = gl_size(H, k, k);
    std::set<int> pool_set;
    for (int j = 1; j <= N; ++j) pool_set.insert(k.at(j));
    for (int i = 0; i < H.h.rows(); ++i) pool_set.insert(H.offset + i);
    std::vector<int> pool;
    for (auto it = pool_set.rbegin(); it != pool_set.rend(); ++it)
        if (*it >= -N) pool.push_back(*it);
    std::vector<std::vector<int>> heads;
    std::vector<int> cur;
    subsets(pool, N, 0, cur, heads);
    WedgeVector out(E);
    for (const auto& head : heads) {
        MayaIndex l = normalize_maya(head);
        if (l.energy() > E) continue;
        out.add_term(l, gl_matrix_element(H, l, k));
    }
    return out;
}

WedgeVector gl_action(const GLElement& H, const WedgeVector& v, int E) {
    H.validate();
    WedgeVector out(E);
    for (const auto& [k, c] : v.terms()) {
        const WedgeVector img = gl_image(H, k, E);
        for (const auto& [l, d] : img.terms()) out.add_term(l, c * d);
    }
    return out;
}

DecomposableParams gl_transform(const GLElement& H, const DecomposableParams& p) {
    const int n = H.h.rows();
    if (!n) return p;
    const int K = static_cast<int>(p.band.size());
    const int rows = std::max(p.support(), -H.offset + K);
    DecomposableParams out = p;
    for (int m = 1; m <= rows; ++m)
        for (int l = H.offset; l < H.offset + n; ++l) {
            Scalar v(0);
            for (int j = H.offset; j < H.offset + n; ++j) {
                const Scalar r = p.r(m, j);
                if (!r.is_zero()) v += r * H.at(l, j);
            }
            out.set(m, l, v);
        }
    return out;
}

// ---------------------------------------------------------------- long monomials

bool SkewSeries::is_antisymmetric() const {
    for (const auto& [e, c] : terms)
        for (int i = 0; i + 1 < nvars; ++i) {
            std::vector<int> s = e;
            std::swap(s[i], s[i + 1]);
            auto it = terms.find(s);
            if (s == e) return false;  // a repeated exponent cannot survive antisymmetry
            if (it == terms.end() || it->second != -c) return false;
        }
    return true;
}

SkewSeries omega_expand(const DecomposableParams& p, int N) {
    p.validate();
    if (N < 0 || N > 20) throw std::invalid_argument("omega_expand: N out of range");
    // row polynomials sum_l r_{ml} x^l
    std::vector<std::vector<std::pair<int, Scalar>>> rows(N);
    for (int m = 1; m <= N; ++m) {
        std::set<int> cols{-m};
        for (int k = 1; k <= static_cast<int>(p.band.size()); ++k) cols.insert(-m + k);
        for (const auto& [ml, c] : p.entries)
            if (ml.first == m) cols.insert(ml.second);
        for (int l : cols) {
            Scalar v = p.r(m, l);
            if (!v.is_zero()) rows[m - 1].emplace_back(l, v);
        }
    }
    // column-by-column Laplace expansion; state = set of rows used so far
    using Poly = std::map<std::vector<int>, Scalar>;
    std::map<unsigned, Poly> state{{0u, Poly{{std::vector<int>{}, Scalar(1)}}}};
    for (int col = 0; col < N; ++col) {
        std::map<unsigned, Poly> next;
        for (const auto& [mask, poly] : state)
            for (int m = 0; m < N; ++m) {
                if (mask >> m & 1u) continue;
                const int sign = __builtin_popcount(mask >> (m + 1)) % 2 ? -1 : 1;
                Poly& dst = next[mask | (1u << m)];
                for (const auto& [e, c] : poly)
                    for (const auto& [l, v] : rows[m]) {
                        std::vector<int> key = e;
                        key.push_back(l);
                        Scalar add = sign > 0 ? c * v : -(c * v);
                        auto it = dst.find(key);
                        if (it == dst.end()) dst.emplace(std::move(key), add);
                        else {
                            it->second += add;
                            if (it->second.is_zero()) dst.erase(it);
                        }
                    }
            }
        state = std::move(next);
    }
    SkewSeries s;
    s.nvars = N;
    if (!state.empty()) s.terms = std::move(state.begin()->second);
    return s;
}

WedgeVector skew_to_wedge(const SkewSeries& s, int E) {
    WedgeVector v(E);
    const int N = s.nvars;
    for (const auto& [e, c] : s.terms) {
        bool dec = true;
        for (int i = 1; i < N && dec; ++i) dec = e[i - 1] > e[i];
        if (!dec || (N && e[N - 1] <= -(N + 1))) continue;
        MayaIndex k = normalize_maya(e);
        if (k.energy() <= E) v.add_term(k, c);
    }
    return v;
}

}  // namespace symfock
