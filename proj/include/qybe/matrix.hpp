#pragma once

#include "qybe/qscalar.hpp"

#include <functional>
#include <vector>

namespace qybe {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = -x.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (is_zero_value(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const T& ykj = y(k, j);
                    if (is_zero_value(ykj)) continue;
                    r(i, j) = r(i, j) + xik * ykj;
                }
            }
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool all_zero() const {
        for (const auto& v : a_) {
            if (!is_zero_value(v)) return false;
        }
        return true;
    }

    T trace() const {
        T acc{};
        for (std::size_t i = 0; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

    template <typename U, typename F>
    Matrix<U> map(F&& f) const {
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    static bool is_zero_value(const T& v) {
        if constexpr (requires { v.is_zero(); })
            return v.is_zero();
        else
            return v == T{};
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<QScalar>;
using RMatrix = Matrix<Real>;
using CMatrix = Matrix<Complex>;

inline QMatrix qidentity(std::size_t n) { return QMatrix::identity(n, QScalar::one()); }

template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& v = a(i, j);
            if (Matrix<T>::is_zero_value(v)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
        }
    return r;
}

// Exact kernel basis over QScalar: Gaussian elimination dividing by single-term
// pivots (pivot = first nonzero entry of the column, per the hw-space contract).
std::vector<std::vector<QScalar>> kernel_basis(const QMatrix& m);

// numeric helpers
inline Real inf_norm(const RMatrix& m) {
    Real w = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Real v = abs(m(i, j));
            if (v > w) w = v;
        }
    return w;
}
inline Real inf_norm(const CMatrix& m) {
    Real w = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Real v = abs(m(i, j));
            if (v > w) w = v;
        }
    return w;
}

// solve (square) A x = b with partial pivoting
std::vector<Complex> solve_complex(CMatrix a, std::vector<Complex> b);

}  // namespace qybe
