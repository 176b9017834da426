#include "symfock/bosonfermion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symfock {

// ---------------------------------------------------------------- ZPoly

namespace {

Partition merge_monomials(const Partition& a, const Partition& b) {
    Partition m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m), std::greater<int>());
    return m;
}

}  // namespace

ZPoly ZPoly::constant(const Rational& c) {
    ZPoly z;
    z.add({}, c);
    return z;
}

ZPoly ZPoly::variable(int j, const Rational& c) {
    if (j < 1) throw std::invalid_argument("z-variables are indexed from 1");
    ZPoly z;
    z.add({j}, c);
    return z;
}

Rational ZPoly::coeff(const Partition& mono) const {
    auto it = terms.find(mono);
    return it == terms.end() ? Rational(0) : it->second;
}

void ZPoly::add(const Partition& mono, const Rational& value) {
    Rational c = value;
    c.canonicalize();
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add(m, c);
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add(m, -c);
    return r;
}

ZPoly ZPoly::truncated(int degree) const {
    ZPoly r;
    for (const auto& [m, c] : terms)
        if (weight(m) <= degree) r.terms.emplace(m, c);
    return r;
}

std::string ZPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (int j : m) os << "*z" << j;
    }
    return os.str();
}

ZPoly multiply(const ZPoly& a, const ZPoly& b, int degree) {
    ZPoly r;
    for (const auto& [ma, ca] : a.terms) {
        const int wa = weight(ma);
        if (wa > degree) continue;
        for (const auto& [mb, cb] : b.terms)
            if (wa + weight(mb) <= degree) r.add(merge_monomials(ma, mb), ca * cb);
    }
    return r;
}

ZPoly negate_variables(const ZPoly& a) {
    ZPoly r;
    for (const auto& [m, c] : a.terms) r.add(m, m.size() % 2 ? Rational(-c) : c);
    return r;
}

ZPoly r_poly(int n) {
    ZPoly r;
    if (n < 0) return r;
    for (const Partition& lam : enumerate_partitions(n)) {
        Rational c(1);
        for (int mult : partition_to_multiplicities(lam))
            if (mult) c /= factorial(mult);
        r.add(lam, c);
    }
    return r;
}

std::vector<std::vector<ZPoly>> q_poly_table(int degree) {
    // numerator N_ab = R_a(z) R_b(-z) - [a = b = 0]; Q_mn = sum_i N_{m+1+i, n-i}
    std::vector<ZPoly> plus, minus;
    for (int n = 0; n <= degree; ++n) {
        plus.push_back(r_poly(n));
        minus.push_back(negate_variables(plus.back()));
    }
    std::vector<std::vector<ZPoly>> q(std::max(degree, 0));
    for (int m = 0; m < degree; ++m) {
        q[m].resize(degree - m);
        for (int n = 0; m + n + 1 <= degree; ++n)
            for (int i = 0; i <= n; ++i)
                q[m][n] = q[m][n] + multiply(plus[m + 1 + i], minus[n - i], degree);
    }
    return q;
}

ZPoly zpoly_det(const std::vector<std::vector<ZPoly>>& M, int degree) {
    const int n = static_cast<int>(M.size());
    if (n == 0) return ZPoly::constant(1);
    if (n > 20) throw std::invalid_argument("determinant too large");
    std::map<unsigned, ZPoly> layer{{0u, ZPoly::constant(1)}};
    for (int row = 0; row < n; ++row) {
        std::map<unsigned, ZPoly> next;
        for (const auto& [mask, val] : layer)
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c) || M[row][c].is_zero()) continue;
                ZPoly term = multiply(val, M[row][c], degree);
                if (term.is_zero()) continue;
                const int above = __builtin_popcount(mask >> (c + 1));
                if (above % 2) term = ZPoly() - term;
                next[mask | (1u << c)] = next[mask | (1u << c)] + term;
            }
        layer = std::move(next);
    }
    auto it = layer.find((1u << n) - 1);
    return it == layer.end() ? ZPoly() : it->second;
}

SymFun zpoly_to_sym(const ZPoly& f, int degree) {
    SymFun out(Basis::p, degree);
    for (const auto& [m, c] : f.terms) {
        if (weight(m) > degree) continue;
        Rational d(1);
        for (int j : m) d *= j;
        out.add_term(m, Scalar(Rational(c / d)));
    }
    return out;
}

// ---------------------------------------------------------------- Delta

WedgeVector delta_times(const SymFun& f, int E) {
    WedgeVector out(E);
    const SymFun fs = convert(f, Basis::s);
    for (const auto& [lam, c] : fs.terms())
        if (weight(lam) <= E) out.add_term(partition_to_maya(lam), c);
    return out;
}

SymFun wedge_to_sym(const WedgeVector& g, int D) {
    SymFun out(Basis::s, D);
    for (const auto& [k, c] : g.terms())
        if (k.energy() <= D) out.add_term(maya_to_partition(k), c);
    return out;
}

// ---------------------------------------------------------------- Pi[A, 1+B]

int pi_window(const DecomposableParams& p, int D) { return std::max(p.support(), D); }

SymFun pi_vector_at(const DecomposableParams& p, int D, int N) {
    if (N < pi_window(p, D)) throw std::invalid_argument("minor size below the stable window");
    SymFun out(Basis::s, D);
    for (int d = 0; d <= D; ++d)
        for (const Partition& lam : enumerate_partitions(d))
            out.add_term(lam, decomposable_coeff(p, partition_to_maya(lam), N));
    return out;
}

SymFun pi_vector(const DecomposableParams& p, int D) {
    p.validate();
    return pi_vector_at(p, D, pi_window(p, D) + 1);
}

bool pi_restriction_holds(const SymFun& f, const DecomposableParams& p, int N) {
    if (N < p.support()) throw std::invalid_argument("restriction needs N >= support");
    const int vdeg = N * (N - 1) / 2;
    const int bound = f.degree() + vdeg;

    FinitePolynomial numerator{N, {}};
    const SkewSeries det_series = omega_expand(p, N);
    for (const auto& [e, c] : det_series.terms) {
        std::vector<int> shifted = e;
        int deg = 0;
        for (int& x : shifted) {
            x += N;
            deg += x;
        }
        if (deg <= bound) numerator.add(shifted, c);
    }

    // prod_{p<q} (x_p - x_q) as signed permutations of the staircase
    FinitePolynomial vandermonde{N, {}};
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    do {
        std::vector<int> e(N);
        int inversions = 0;
        for (int i = 0; i < N; ++i) {
            e[perm[i]] = N - 1 - i;
            for (int j = i + 1; j < N; ++j) inversions += perm[i] > perm[j];
        }
        vandermonde.add(e, Scalar(inversions % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    FinitePolynomial product{N, {}};
    const FinitePolynomial fr = evaluate_finite(f, N);
    for (const auto& [ea, ca] : fr.terms)
        for (const auto& [eb, cb] : vandermonde.terms) {
            std::vector<int> e(N);
            for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
            product.add(e, ca * cb);
        }
    return product == numerator;
}

// ---------------------------------------------------------------- GL_infinity

int glinf_window(const GLElement& H, int dx, int dy) {
    int M = std::max(dx, dy);
    if (H.h.rows()) M = std::max(M, -H.offset);
    return M;
}

std::map<PartitionPair, Scalar> glinf_minors(const GLElement& H, int dx, int dy, int N) {
    if (N < glinf_window(H, dx, dy)) throw std::invalid_argument("minor size below the stable window");
    std::vector<MayaIndex> rows, cols;
    std::vector<Partition> rparts, cparts;
    for (int d = 0; d <= dx; ++d)
        for (const Partition& lam : enumerate_partitions(d)) {
            rparts.push_back(lam);
            rows.push_back(partition_to_maya(lam));
        }
    for (int d = 0; d <= dy; ++d)
        for (const Partition& lam : enumerate_partitions(d)) {
            cparts.push_back(lam);
            cols.push_back(partition_to_maya(lam));
        }
    std::map<PartitionPair, Scalar> out;
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) {
            Matrix<Scalar> M(N, N);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) M(i - 1, j - 1) = H.at(rows[a].at(i), cols[b].at(j));
            Scalar d = det(M);
            if (!d.is_zero()) out.emplace(PartitionPair{rparts[a], cparts[b]}, d);
        }
    return out;
}

BisymKernel glinf_kernel(const GLElement& H, int dx, int dy) {
    H.validate();
    return BisymKernel::from_expansion(Basis::s, Basis::s, dx, dy,
                                      glinf_minors(H, dx, dy, glinf_window(H, dx, dy) + 1));
}

SymFun glinf_apply(const GLElement& H, const SymFun& f, int D) {
    return apply(glinf_kernel(H, D, f.degree()), f, KerovWeight::classical()).truncated(D);
}

int gl_energy_shift(const GLElement& H) {
    const int n = H.h.rows();
    int best = 0;
    for (int c = 1; 2 * c <= n; ++c) {
        int gain = 0;
        for (int i = 0; i < c; ++i) gain += (n - 1 - i) - i;
        best = std::max(best, gain);
    }
    return best;
}

// ---------------------------------------------------------------- multiplicative vectors

namespace {

void check_unit_series(const std::vector<Scalar>& r) {
    if (r.empty() || !r[0].is_one()) throw std::invalid_argument("r(x) must start with 1");
}

Scalar coeff_at(const std::vector<Scalar>& r, int n) {
    return n >= 0 && n < static_cast<int>(r.size()) ? r[n] : Scalar(0);
}

}  // namespace

SymFun multiplicative_vector(const std::vector<Scalar>& r, int D) {
    check_unit_series(r);
    // r = exp(sum a_j x^j), so n r_n = sum_j j a_j r_{n-j}
    std::vector<Scalar> a(D + 1);
    for (int n = 1; n <= D; ++n) {
        Scalar acc = Scalar(n) * coeff_at(r, n);
        for (int j = 1; j < n; ++j) acc -= Scalar(j) * a[j] * coeff_at(r, n - j);
        a[n] = acc / Scalar(n);
    }
    SymFun out(Basis::p, D);
    for (int d = 0; d <= D; ++d)
        for (const Partition& lam : enumerate_partitions(d)) {
            Scalar c(1);
            for (int j : lam) c *= a[j];
            for (int mult : partition_to_multiplicities(lam))
                if (mult) c /= Scalar(factorial(mult));
            out.add_term(lam, c);
        }
    return out;
}

WedgeVector mult_vector_image(const std::vector<Scalar>& r, int E) {
    check_unit_series(r);
    DecomposableParams p;
    p.band.assign(r.begin() + 1, r.end());
    while (!p.band.empty() && p.band.back().is_zero()) p.band.pop_back();
    return expand_decomposable(p, E);
}

ZetaArray zeta_coeffs(const std::vector<Scalar>& r, int cutoff) {
    check_unit_series(r);
    std::vector<Scalar> s(cutoff + 1);  // 1/r
    if (cutoff >= 0) s[0] = 1;
    for (int n = 1; n <= cutoff; ++n) {
        Scalar acc(0);
        for (int i = 1; i <= n; ++i) acc -= coeff_at(r, i) * s[n - i];
        s[n] = acc;
    }
    ZetaArray z(std::max(cutoff, 0));
    for (int a = 0; a < cutoff; ++a) {
        z[a].resize(cutoff - a);
        for (int b = 0; a + b + 1 <= cutoff; ++b)
            for (int i = 0; i <= b; ++i) z[a][b] += coeff_at(r, a + 1 + b - i) * s[i];
    }
    return z;
}

DecomposableParams zeta_params(const ZetaArray& z) {
    DecomposableParams p;
    for (size_t a = 0; a < z.size(); ++a)
        for (size_t b = 0; b < z[a].size(); ++b)
            if (!z[a][b].is_zero()) p.entries[{static_cast<int>(b) + 1, static_cast<int>(a)}] = z[a][b];
    return p;
}

WedgeVector zeta_image(const std::vector<Scalar>& r, int E) {
    return expand_decomposable(zeta_params(zeta_coeffs(r, E)), E);
}

// ---------------------------------------------------------------- inversion

namespace {

using RowEntry = std::function<ZPoly(int m, int l)>;

SymFun pair_with_rows(const WedgeVector& g, int D, const RowEntry& entry) {
    SymFun out(Basis::p, D);
    for (const auto& [k, c] : g.terms()) {
        if (k.energy() > D) continue;
        const int N = static_cast<int>(k.head.size());
        std::vector<std::vector<ZPoly>> M(N, std::vector<ZPoly>(N));
        for (int m = 1; m <= N; ++m)
            for (int j = 1; j <= N; ++j) M[m - 1][j - 1] = entry(m, k.at(j));
        out = out + zpoly_to_sym(zpoly_det(M, D), D).scaled(c);
    }
    return out;
}

}  // namespace

SymFun bf_inverse(const WedgeVector& g, int D) {
    std::vector<ZPoly> R;
    for (int n = 0; n <= D; ++n) R.push_back(r_poly(n));
    return pair_with_rows(g, D, [&](int m, int l) {
        const int n = l + m;
        return n >= 0 && n <= D ? R[n] : ZPoly();
    });
}

SymFun bf_inverse_q(const WedgeVector& g, int D) {
    const auto Q = q_poly_table(D);
    return pair_with_rows(g, D, [&](int m, int l) {
        if (l == -m) return ZPoly::constant(1);
        if (l >= 0 && m + l <= D) return Q[l][m - 1];
        return ZPoly();
    });
}

}  // namespace symfock
