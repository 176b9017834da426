// Truncated power series in one grading variable s over a coefficient
// field T. A series built from a constant carries no truncation until it
// meets a truncated one.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace symfock {

template <class T>
class Series {
public:
    Series() : order_(-1) {}
    Series(int c) : c_{T(c)}, order_(-1) { trim(); }
    Series(const T& c) : c_{c}, order_(-1) { trim(); }
    Series(std::vector<T> c, int order) : c_(std::move(c)), order_(order) { trim(); }

    // The monomial c*s^k, truncated to `order` terms.
    static Series monomial(const T& c, int k, int order) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return Series(std::move(v), order);
    }

    int order() const { return order_; }
    T coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    Series operator+(const Series& o) const {
        const int ord = merge(order_, o.order_);
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Series(std::move(r), ord);
    }
    Series operator-() const {
        std::vector<T> r(c_);
        for (auto& x : r) x = T(0) - x;
        return Series(std::move(r), order_);
    }
    Series operator-(const Series& o) const { return *this + (-o); }
    Series operator*(const Series& o) const {
        const int ord = merge(order_, o.order_);
        if (c_.empty() || o.c_.empty()) return Series({}, ord);
        size_t n = c_.size() + o.c_.size() - 1;
        if (ord >= 0) n = std::min<size_t>(n, ord);
        std::vector<T> r(n, T(0));
        for (size_t i = 0; i < c_.size() && i < n; ++i) {
            if (is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size() && i + j < n; ++j)
                if (!is_zero(o.c_[j])) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Series(std::move(r), ord);
    }
    Series inverse() const {
        if (c_.empty() || is_zero(c_[0])) throw std::domain_error("series is not a unit");
        if (order_ < 0) {
            if (c_.size() == 1) return Series(T(1) / c_[0]);
            throw std::domain_error("inverse of an untruncated polynomial series");
        }
        std::vector<T> r(order_, T(0));
        const T inv0 = T(1) / c_[0];
        if (order_ > 0) r[0] = inv0;
        for (int k = 1; k < order_; ++k) {
            T acc(0);
            for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
                if (!is_zero(c_[j])) acc = acc + c_[j] * r[k - j];
            r[k] = T(0) - acc * inv0;
        }
        return Series(std::move(r), order_);
    }
    Series operator/(const Series& o) const { return *this * o.inverse(); }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    bool operator==(const Series& o) const {
        const int ord = merge(order_, o.order_);
        const size_t n = ord >= 0 ? static_cast<size_t>(ord) : std::max(c_.size(), o.c_.size());
        for (size_t i = 0; i < n; ++i)
            if (!(coeff(static_cast<int>(i)) == o.coeff(static_cast<int>(i)))) return false;
        return true;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    Series truncated(int order) const {
        std::vector<T> r(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), order));
        return Series(std::move(r), order);
    }

private:
    static int merge(int a, int b) {
        if (a < 0) return b;
        if (b < 0) return a;
        return std::min(a, b);
    }
    void trim() {
        if (order_ >= 0 && static_cast<int>(c_.size()) > order_) c_.resize(order_);
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
    int order_;  // number of retained coefficients; -1 = exact
};

template <class T>
bool is_zero(const Series<T>& s) {
    return s.coeffs().empty();
}

template <class T>
bool is_unit(const Series<T>& s) {
    return !s.coeffs().empty() && !is_zero(s.coeffs()[0]);
}

// exp(f) for f with zero constant term.
template <class T>
Series<T> series_exp(const Series<T>& f) {
    if (!is_zero(f.coeff(0))) throw std::domain_error("series_exp needs zero constant term");
    const int n = f.order();
    if (n < 0) throw std::domain_error("series_exp needs a truncation order");
    // e' = f' e
    std::vector<T> e(n, T(0));
    if (n > 0) e[0] = T(1);
    for (int k = 1; k < n; ++k) {
        T acc(0);
        for (int j = 1; j <= k; ++j) {
            T fj = f.coeff(j);
            if (!is_zero(fj)) acc = acc + T(j) * fj * e[k - j];
        }
        e[k] = acc / T(k);
    }
    return Series<T>(std::move(e), n);
}

// Square root with constant term 1.
template <class T>
Series<T> series_sqrt(const Series<T>& f) {
    if (!(f.coeff(0) == T(1))) throw std::domain_error("series_sqrt needs constant term 1");
    const int n = f.order();
    if (n < 0) throw std::domain_error("series_sqrt needs a truncation order");
    std::vector<T> g(n, T(0));
    if (n > 0) g[0] = T(1);
    for (int k = 1; k < n; ++k) {
        T acc = f.coeff(k);
        for (int j = 1; j < k; ++j) acc = acc - g[j] * g[k - j];
        g[k] = acc / T(2);
    }
    return Series<T>(std::move(g), n);
}

}  // namespace symfock
