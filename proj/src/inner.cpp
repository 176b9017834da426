#include "symfock/inner.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace symfock {

KerovWeight KerovWeight::classical() { return KerovWeight{}; }

KerovWeight KerovWeight::jack(const Rational& alpha) {
    if (sgn(alpha) == 0) throw std::invalid_argument("jack parameter must be nonzero");
    KerovWeight w;
    w.family_ = WeightFamily::jack;
    w.alpha_ = alpha;
    return w;
}

KerovWeight KerovWeight::hall_littlewood() {
    KerovWeight w;
    w.family_ = WeightFamily::hall_littlewood;
    return w;
}

KerovWeight KerovWeight::macdonald() {
    KerovWeight w;
    w.family_ = WeightFamily::macdonald;
    return w;
}

KerovWeight KerovWeight::custom(std::vector<Scalar> omegas) {
    for (size_t j = 0; j < omegas.size(); ++j)
        if (omegas[j].is_zero()) throw std::invalid_argument("custom weight omega(" + std::to_string(j + 1) + ") is zero");
    KerovWeight w;
    w.family_ = WeightFamily::custom;
    w.custom_ = std::move(omegas);
    return w;
}

KerovWeight KerovWeight::parse(const std::string& spec) {
    if (spec == "classical") return classical();
    if (spec == "hl" || spec == "hall-littlewood") return hall_littlewood();
    if (spec == "macdonald") return macdonald();
    if (spec.rfind("jack:", 0) == 0) return jack(parse_rational(spec.substr(5)));
    if (spec.rfind("custom:", 0) == 0) {
        std::vector<Scalar> om;
        std::stringstream ss(spec.substr(7));
        std::string tok;
        while (std::getline(ss, tok, ',')) om.push_back(Scalar::parse(tok));
        return custom(std::move(om));
    }
    throw std::invalid_argument("unknown weight '" + spec + "' (expected classical, jack:ALPHA, hl, macdonald or custom:w1,w2,...)");
}

Scalar KerovWeight::omega(int j) const {
    if (j < 1) throw std::invalid_argument("omega index must be positive");
    const Scalar q = Scalar::q(), t = Scalar::t();
    switch (family_) {
        case WeightFamily::classical: return Scalar(j);
        case WeightFamily::jack: return Scalar(Rational(j) * alpha_);
        case WeightFamily::hall_littlewood: return Scalar(j) / (Scalar(1) - t.pow(j));
        case WeightFamily::macdonald: return Scalar(j) * (Scalar(1) - q.pow(j)) / (Scalar(1) - t.pow(j));
        case WeightFamily::custom:
            if (j > static_cast<int>(custom_.size()))
                throw std::out_of_range("custom weight has no omega(" + std::to_string(j) + ")");
            return custom_[j - 1];
    }
    return Scalar(0);
}

Matrix<Scalar> KerovWeight::omega_matrix(int window) const {
    Matrix<Scalar> m(window, window);
    for (int j = 1; j <= window; ++j) m(j - 1, j - 1) = omega(j);
    return m;
}

std::string KerovWeight::name() const {
    switch (family_) {
        case WeightFamily::classical: return "classical";
        case WeightFamily::jack: return "jack:" + to_string(alpha_);
        case WeightFamily::hall_littlewood: return "hl";
        case WeightFamily::macdonald: return "macdonald";
        case WeightFamily::custom: {
            std::string s = "custom:";
            for (size_t j = 0; j < custom_.size(); ++j) s += (j ? "," : "") + custom_[j].str();
            return s;
        }
    }
    return "";
}

Scalar gram_p_multiplicities(const Multiplicities& m, const KerovWeight& w) {
    Scalar g(1);
    for (size_t j = 0; j < m.size(); ++j)
        if (m[j]) g *= Scalar(factorial(m[j])) * w.omega(static_cast<int>(j) + 1).pow(m[j]);
    return g;
}

Scalar gram_p(const Partition& lambda, const KerovWeight& w) { return gram_p_multiplicities(partition_to_multiplicities(lambda), w); }

Scalar inner_product(const SymFun& f, const SymFun& g, const KerovWeight& w) {
    const int D = std::min(f.degree(), g.degree());
    SymFun fp = convert(f.truncated(D), Basis::p), gp = convert(g.truncated(D), Basis::p);
    Scalar r(0);
    for (const auto& [lam, c] : fp.terms()) {
        Scalar other = gp.coeff(lam);
        if (!other.is_zero()) r += c * other * gram_p(lam, w);
    }
    return r;
}

namespace {

struct GramCache {
    std::mutex mu;
    std::map<std::tuple<int, char, std::string>, Matrix<Scalar>> entries;
};

GramCache& gram_cache() {
    static GramCache c;
    return c;
}

Matrix<Scalar> to_scalar(const Matrix<Rational>& m) {
    Matrix<Scalar> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
    return r;
}

}  // namespace

Matrix<Scalar> gram_matrix(int d, Basis b, const KerovWeight& w) {
    auto key = std::make_tuple(d, basis_char(b), w.name());
    auto& c = gram_cache();
    {
        std::lock_guard lock(c.mu);
        if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
    }
    const auto& parts = enumerate_partitions(d);
    const int n = static_cast<int>(parts.size());
    Matrix<Scalar> gp(n, n);
    for (int i = 0; i < n; ++i) gp(i, i) = gram_p(parts[i], w);
    Matrix<Scalar> g = gp;
    if (b != Basis::p) {
        Matrix<Scalar> T = to_scalar(transition(d, b, Basis::p));
        g = T * gp * transpose(T);
    }
    std::lock_guard lock(c.mu);
    c.entries.emplace(key, g);
    return g;
}

SymFun dual_element(Basis b, const Partition& lambda, const KerovWeight& w, int degree) {
    const int d = weight(lambda);
    Matrix<Scalar> ginv = inverse(gram_matrix(d, b, w));
    const int i = partition_index(lambda);
    std::vector<Scalar> row(ginv.cols());
    for (int j = 0; j < ginv.cols(); ++j) row[j] = ginv(i, j);
    return SymFun::from_component(b, degree, d, row);
}

}  // namespace symfock
