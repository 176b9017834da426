// Dense matrices over an exact coefficient type T and the elimination
// routines used throughout. T must provide +, -, *, /, is_zero(T) and
// is_unit(T); pivots are always chosen among units.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symfock/scalars.hpp"

namespace symfock {

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows[0].size()) : 0;
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = T(0) - a(i, j);
    return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
    Matrix<T> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

template <class T>
Matrix<T> scale(const T& c, const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (!(a(i, j) == a(j, i))) return false;
    return true;
}

template <class T>
bool is_zero_matrix(const Matrix<T>& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

// Zero-padded or cropped copy.
template <class T>
Matrix<T> resized(const Matrix<T>& a, int rows, int cols) {
    Matrix<T> r(rows, cols);
    for (int i = 0; i < std::min(rows, a.rows()); ++i)
        for (int j = 0; j < std::min(cols, a.cols()); ++j) r(i, j) = a(i, j);
    return r;
}

template <class T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
    Matrix<T> r(a.rows() + c.rows(), a.cols() + b.cols());
    auto put = [&](const Matrix<T>& m, int r0, int c0) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r(r0 + i, c0 + j) = m(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols());
    put(c, a.rows(), 0);
    put(d, a.rows(), a.cols());
    return r;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& a, int r0, int c0, int rows, int cols) {
    Matrix<T> r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(i, j) = a(r0 + i, c0 + j);
    return r;
}

// Determinant by elimination with unit pivots. Throws if a column has
// nonzero entries but no unit (only possible over non-fields).
template <class T>
T det(Matrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
    const int n = a.rows();
    T d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        bool any = false;
        for (int r = c; r < n; ++r) {
            if (!is_zero(a(r, c))) any = true;
            if (is_unit(a(r, c))) {
                p = r;
                break;
            }
        }
        if (p < 0) {
            if (any) throw std::domain_error("det: no unit pivot available");
            return T(0);
        }
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = T(0) - d;
        }
        const T piv = a(c, c);
        d = d * piv;
        const T inv = T(1) / piv;
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c))) continue;
            const T f = a(r, c) * inv;
            for (int j = c + 1; j < n; ++j)
                if (!is_zero(a(c, j))) a(r, j) = a(r, j) - f * a(c, j);
        }
    }
    return d;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<T> a = m, inv = Matrix<T>::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (is_unit(a(r, c))) {
                p = r;
                break;
            }
        if (p < 0) throw SingularMatrix("matrix is not invertible");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const T pinv = T(1) / a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) = a(c, j) * pinv;
            inv(c, j) = inv(c, j) * pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            const T f = a(r, c);
            for (int j = 0; j < n; ++j) {
                if (!is_zero(a(c, j))) a(r, j) = a(r, j) - f * a(c, j);
                if (!is_zero(inv(c, j))) inv(r, j) = inv(r, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

// Reduced row echelon form over a field; zero rows removed.
template <class T>
Matrix<T> rref(Matrix<T> a, std::vector<int>* pivots = nullptr) {
    const int R = a.rows(), C = a.cols();
    int row = 0;
    std::vector<int> piv;
    for (int c = 0; c < C && row < R; ++c) {
        int p = -1;
        for (int r = row; r < R; ++r)
            if (!is_zero(a(r, c))) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < C; ++j) std::swap(a(p, j), a(row, j));
        const T inv = T(1) / a(row, c);
        for (int j = c; j < C; ++j) a(row, j) = a(row, j) * inv;
        for (int r = 0; r < R; ++r) {
            if (r == row || is_zero(a(r, c))) continue;
            const T f = a(r, c);
            for (int j = c; j < C; ++j)
                if (!is_zero(a(row, j))) a(r, j) = a(r, j) - f * a(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    if (pivots) *pivots = piv;
    return submatrix(a, 0, 0, row, C);
}

template <class T>
int rank(const Matrix<T>& a) {
    return rref(a).rows();
}

// Basis of {x : a x = 0}, as columns.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
    std::vector<int> piv;
    Matrix<T> e = rref(a, &piv);
    const int C = a.cols();
    std::vector<bool> is_piv(C, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> free;
    for (int c = 0; c < C; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix<T> n(C, static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        n(free[k], static_cast<int>(k)) = T(1);
        for (size_t r = 0; r < piv.size(); ++r)
            n(piv[r], static_cast<int>(k)) = T(0) - e(static_cast<int>(r), free[k]);
    }
    return n;
}

}  // namespace symfock
