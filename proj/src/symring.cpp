#include "symfock/symring.hpp"

#include <algorithm>
#include <climits>
#include <tuple>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symfock {

char basis_char(Basis b) {
    switch (b) {
        case Basis::p: return 'p';
        case Basis::m: return 'm';
        case Basis::s: return 's';
    }
    return '?';
}

Basis parse_basis(const std::string& s) {
    if (s == "p") return Basis::p;
    if (s == "m") return Basis::m;
    if (s == "s") return Basis::s;
    throw std::invalid_argument("unknown basis '" + s + "' (expected p, m or s)");
}

// ---------------------------------------------------------------- SymFun

SymFun::SymFun(Basis b, int degree) : basis_(b), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative truncation degree");
}

SymFun SymFun::basis_element(Basis b, const Partition& lambda, int degree, Scalar c) {
    SymFun f(b, degree);
    f.add_term(lambda, c);
    return f;
}

SymFun SymFun::constant(const Scalar& c, Basis b, int degree) {
    return basis_element(b, {}, degree, c);
}

SymFun SymFun::from_component(Basis b, int degree, int d, const std::vector<Scalar>& coeffs) {
    const auto& parts = enumerate_partitions(d);
    if (coeffs.size() != parts.size()) throw std::invalid_argument("component size mismatch");
    SymFun f(b, degree);
    for (size_t i = 0; i < parts.size(); ++i) f.add_term(parts[i], coeffs[i]);
    return f;
}

Scalar SymFun::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SymFun::add_term(const Partition& lambda, const Scalar& c) {
    validate_partition(lambda);
    if (weight(lambda) > degree_)
        throw std::invalid_argument("term " + partition_str(lambda) + " exceeds truncation degree " +
                                    std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<Scalar> SymFun::component(int d) const {
    const auto& parts = enumerate_partitions(d);
    std::vector<Scalar> v(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) v[i] = coeff(parts[i]);
    return v;
}

SymFun SymFun::operator+(const SymFun& o) const {
    SymFun r = *this;
    SymFun other = o.basis_ == basis_ ? o : convert(o, basis_);
    r.degree_ = std::min(degree_, o.degree_);
    r = r.truncated(r.degree_);
    for (const auto& [lam, c] : other.terms_)
        if (weight(lam) <= r.degree_) r.add_term(lam, c);
    return r;
}

SymFun SymFun::operator-() const { return scaled(Scalar(-1)); }
SymFun SymFun::operator-(const SymFun& o) const { return *this + (-o); }

SymFun SymFun::scaled(const Scalar& c) const {
    SymFun r(basis_, degree_);
    for (const auto& [lam, v] : terms_) r.add_term(lam, c * v);
    return r;
}

SymFun SymFun::truncated(int degree) const {
    SymFun r(basis_, degree);
    for (const auto& [lam, v] : terms_)
        if (weight(lam) <= degree) r.terms_.emplace(lam, v);
    return r;
}

bool SymFun::operator==(const SymFun& o) const {
    if (degree_ != o.degree_) return false;
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return terms_ == convert(o, basis_).terms_;
}

std::string SymFun::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // ascending degree, then enumeration order
    std::vector<std::pair<Partition, Scalar>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int wa = weight(a.first), wb = weight(b.first);
        if (wa != wb) return wa < wb;
        return a.first > b.first;
    });
    for (const auto& [lam, c] : v) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool wrap = !c.is_plain() && (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos);
        if (wrap) cs = "(" + cs + ")";
        if (lam.empty()) {
            os << cs;
            continue;
        }
        if (!c.is_one()) os << cs << "*";
        os << basis_char(basis_) << partition_str(lam);
    }
    return os.str();
}

// ---------------------------------------------------------------- tables

std::vector<std::vector<int>> distinct_permutations(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

// Number of maps from the parts of lambda to the parts of mu whose fibres
// sum to each part of mu: the coefficient of m_mu in p_lambda.
struct PowerToMonomialCounter {
    const Partition& lambda;
    std::map<std::pair<size_t, std::vector<int>>, Rational> memo;

    Rational count(size_t i, std::vector<int> caps) {
        if (i == lambda.size()) {
            for (int c : caps)
                if (c) return 0;
            return 1;
        }
        std::sort(caps.begin(), caps.end());
        auto key = std::make_pair(i, caps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational total = 0;
        for (size_t j = 0; j < caps.size();) {
            size_t k = j;
            while (k < caps.size() && caps[k] == caps[j]) ++k;
            if (caps[j] >= lambda[i]) {
                std::vector<int> next = caps;
                next[j] -= lambda[i];
                total += Rational(static_cast<long>(k - j)) * count(i + 1, next);
            }
            j = k;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

// Sign of the permutation sorting `g` strictly decreasing; 0 on repeats.
int sort_sign(std::vector<int>& g) {
    int sign = 1;
    for (size_t i = 1; i < g.size(); ++i)
        for (size_t j = i; j > 0 && g[j] >= g[j - 1]; --j) {
            if (g[j] == g[j - 1]) return 0;
            std::swap(g[j], g[j - 1]);
            sign = -sign;
        }
    return sign;
}

struct DegreeTables {
    Matrix<Rational> t[3][3];
};

std::shared_ptr<const DegreeTables> build_tables(int d) {
    const auto& parts = enumerate_partitions(d);
    const int n = static_cast<int>(parts.size());
    auto tabs = std::make_shared<DegreeTables>();

    Matrix<Rational> p2m(n, n);
    for (int a = 0; a < n; ++a) {
        PowerToMonomialCounter ctr{parts[a], {}};
        for (int b = 0; b < n; ++b) p2m(a, b) = ctr.count(0, parts[b]);
    }

    // m_nu * a_delta = sum over rearrangements beta of nu of a_{beta+delta},
    // read off in d variables; this is the m -> s transition.
    Matrix<Rational> m2s(n, n);
    const int N = d;
    for (int a = 0; a < n; ++a) {
        std::vector<int> padded = parts[a];
        padded.resize(N, 0);
        std::sort(padded.begin(), padded.end());
        do {
            std::vector<int> g(N);
            for (int i = 0; i < N; ++i) g[i] = padded[i] + (N - 1 - i);
            int sg = sort_sign(g);
            if (!sg) continue;
            Partition mu;
            for (int i = 0; i < N; ++i)
                if (int x = g[i] - (N - 1 - i); x > 0) mu.push_back(x);
            m2s(a, partition_index(mu)) += sg;
        } while (std::next_permutation(padded.begin(), padded.end()));
    }

    const int P = static_cast<int>(Basis::p), M = static_cast<int>(Basis::m), S = static_cast<int>(Basis::s);
    tabs->t[P][M] = p2m;
    tabs->t[M][P] = inverse(p2m);
    tabs->t[M][S] = m2s;
    tabs->t[S][M] = inverse(m2s);
    tabs->t[P][S] = p2m * m2s;
    tabs->t[S][P] = tabs->t[S][M] * tabs->t[M][P];
    for (int b = 0; b < 3; ++b) tabs->t[b][b] = Matrix<Rational>::identity(n);
    return tabs;
}

struct TableCache {
    std::shared_mutex mu;
    std::map<int, std::shared_ptr<const DegreeTables>> by_degree;
};

TableCache& table_cache() {
    static TableCache c;
    return c;
}

}  // namespace

const Matrix<Rational>& transition(int d, Basis from, Basis to) {
    auto& c = table_cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.by_degree.find(d);
        if (it != c.by_degree.end()) return it->second->t[static_cast<int>(from)][static_cast<int>(to)];
    }
    auto built = build_tables(d);
    std::unique_lock lock(c.mu);
    auto it = c.by_degree.emplace(d, std::move(built)).first;
    return it->second->t[static_cast<int>(from)][static_cast<int>(to)];
}

SymFun convert(const SymFun& f, Basis target) {
    if (f.basis() == target) return f;
    SymFun r(target, f.degree());
    std::map<int, std::vector<std::pair<int, Scalar>>> by_degree;
    for (const auto& [lam, c] : f.terms()) by_degree[weight(lam)].emplace_back(partition_index(lam), c);
    for (const auto& [d, entries] : by_degree) {
        const auto& T = transition(d, f.basis(), target);
        const auto& parts = enumerate_partitions(d);
        std::vector<Scalar> out(parts.size());
        for (const auto& [i, c] : entries)
            for (int j = 0; j < T.cols(); ++j)
                if (sgn(T(i, j)) != 0) out[j] += c * Scalar(T(i, j));
        for (size_t j = 0; j < parts.size(); ++j) r.add_term(parts[j], out[j]);
    }
    return r;
}

SymFun multiply(const SymFun& f, const SymFun& g) {
    const int D = std::min(f.degree(), g.degree());
    SymFun fp = convert(f, Basis::p), gp = convert(g, Basis::p);
    SymFun r(Basis::p, D);
    for (const auto& [a, ca] : fp.terms()) {
        const int wa = weight(a);
        for (const auto& [b, cb] : gp.terms()) {
            if (wa + weight(b) > D) continue;
            Partition u = a;
            u.insert(u.end(), b.begin(), b.end());
            std::sort(u.rbegin(), u.rend());
            r.add_term(u, ca * cb);
        }
    }
    return f.basis() == g.basis() ? convert(r, f.basis()) : r;
}

// ---------------------------------------------------------------- finite

void FinitePolynomial::add(const std::vector<int>& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool FinitePolynomial::is_symmetric() const {
    for (const auto& [e, c] : terms) {
        std::vector<int> f = e;
        for (int i = 0; i + 1 < nvars; ++i) {
            std::swap(f[i], f[i + 1]);
            auto it = terms.find(f);
            if (it == terms.end() || it->second != c) return false;
            std::swap(f[i], f[i + 1]);
        }
    }
    return true;
}

std::string FinitePolynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool mono = false;
        std::ostringstream m;
        for (int i = 0; i < nvars; ++i) {
            if (!e[i]) continue;
            if (mono) m << "*";
            mono = true;
            m << "x" << (i + 1);
            if (e[i] > 1) m << "^" << e[i];
        }
        if (!mono) {
            os << c.str();
        } else {
            if (!c.is_one()) os << (c.is_plain() ? c.str() : "(" + c.str() + ")") << "*";
            os << m.str();
        }
    }
    return os.str();
}

FinitePolynomial evaluate_finite(const SymFun& f, int nvars) {
    if (nvars < 1) throw std::invalid_argument("number of variables must be positive");
    SymFun fm = convert(f, Basis::m);
    FinitePolynomial r;
    r.nvars = nvars;
    for (const auto& [lam, c] : fm.terms()) {
        if (static_cast<int>(lam.size()) > nvars) continue;
        std::vector<int> e = lam;
        e.resize(nvars, 0);
        for (const auto& perm : distinct_permutations(e)) r.add(perm, c);
    }
    return r;
}

namespace {

// Integer polynomial in N variables with packed exponents.
class PackedPoly {
public:
    PackedPoly(int nvars, int max_exp) : n_(nvars) {
        bits_ = std::min(64 / nvars, 32);
        if (static_cast<long long>(max_exp) >= (1LL << bits_))
            throw std::domain_error("bialternant too large for packed exponents");
        mask_ = (1ULL << bits_) - 1;
    }

    uint64_t pack(const std::vector<int>& e) const {
        uint64_t k = 0;
        for (int i = 0; i < n_; ++i) k |= static_cast<uint64_t>(e[i]) << (bits_ * i);
        return k;
    }
    int exp(uint64_t key, int i) const { return static_cast<int>((key >> (bits_ * i)) & mask_); }
    uint64_t unit(int i) const { return 1ULL << (bits_ * i); }

    // Keys must be distinct.
    void add(uint64_t key, long long c) {
        if (c) t_.emplace_back(key, c);
    }

    // Exact quotient by (x_i - x_j). Terms are grouped by their exponents in
    // the other variables; each group is a polynomial f(x_i, x_j) and with
    // f = sum_a f_a(x_j) x_i^a the quotient satisfies g_{a-1} = f_a + x_j g_a.
    void divide_by_difference(int i, int j) {
        const uint64_t both = (mask_ << (bits_ * i)) | (mask_ << (bits_ * j));
        struct Term {
            uint64_t rest;
            int a, b;
            long long c;
        };
        std::vector<Term> f;
        f.reserve(t_.size());
        for (const auto& [k, c] : t_) f.push_back({k & ~both, exp(k, i), exp(k, j), c});
        std::sort(f.begin(), f.end(), [](const Term& x, const Term& y) {
            if (x.rest != y.rest) return x.rest < y.rest;
            if (x.a != y.a) return x.a > y.a;
            return x.b < y.b;
        });
        std::vector<std::pair<uint64_t, long long>> result;
        result.reserve(f.size() * 2);
        std::vector<std::pair<int, long long>> g, next;
        size_t pos = 0;
        while (pos < f.size()) {
            const uint64_t rest = f[pos].rest;
            g.clear();
            int a = f[pos].a;
            while (true) {
                // next = f_a + x_j g, merged by b
                next.clear();
                size_t v = 0;
                while ((pos < f.size() && f[pos].rest == rest && f[pos].a == a) || v < g.size()) {
                    const bool has_f = pos < f.size() && f[pos].rest == rest && f[pos].a == a;
                    const int bu = has_f ? f[pos].b : INT_MAX;
                    const int bv = v < g.size() ? g[v].first + 1 : INT_MAX;
                    long long val;
                    int b;
                    if (bu < bv) {
                        b = bu, val = f[pos++].c;
                    } else if (bv < bu) {
                        b = bv, val = g[v++].second;
                    } else {
                        b = bu;
                        if (__builtin_add_overflow(f[pos].c, g[v].second, &val))
                            throw std::overflow_error("bialternant overflow");
                        ++pos, ++v;
                    }
                    if (val) next.emplace_back(b, val);
                }
                if (a == 0) {
                    if (!next.empty()) throw std::logic_error("alternant not divisible by Vandermonde factor");
                    break;
                }
                for (const auto& [b, val] : next) {
                    if (b >= (1LL << bits_)) throw std::domain_error("bialternant exponent overflow");
                    result.emplace_back(rest + static_cast<uint64_t>(a - 1) * unit(i) + static_cast<uint64_t>(b) * unit(j),
                                        val);
                }
                g.swap(next);
                if (g.empty()) {
                    if (pos == f.size() || f[pos].rest != rest) break;
                    a = f[pos].a;
                } else {
                    --a;
                }
            }
        }
        t_ = std::move(result);
    }

    const std::vector<std::pair<uint64_t, long long>>& terms() const { return t_; }

private:
    int n_, bits_;
    uint64_t mask_;
    std::vector<std::pair<uint64_t, long long>> t_;
};

}  // namespace

FinitePolynomial schur_from_bialternant(const Partition& lambda, int nvars) {
    validate_partition(lambda);
    if (nvars < static_cast<int>(lambda.size()))
        throw std::invalid_argument("schur_from_bialternant: need at least " + std::to_string(lambda.size()) +
                                    " variables");
    const int N = nvars;
    std::vector<int> ex(N);
    for (int j = 0; j < N; ++j) ex[j] = (j < static_cast<int>(lambda.size()) ? lambda[j] : 0) + N - 1 - j;
    PackedPoly poly(N, ex.empty() ? 0 : ex[0]);

    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (perm[a] > perm[b]) ++inv;
        std::vector<int> e(N);
        for (int k = 0; k < N; ++k) e[k] = ex[perm[k]];
        poly.add(poly.pack(e), inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l) poly.divide_by_difference(k, l);

    FinitePolynomial r;
    r.nvars = N;
    for (const auto& [key, c] : poly.terms()) {
        std::vector<int> e(N);
        for (int i = 0; i < N; ++i) e[i] = poly.exp(key, i);
        r.add(e, Scalar(Rational(static_cast<long>(c))));
    }
    return r;
}

}  // namespace symfock
