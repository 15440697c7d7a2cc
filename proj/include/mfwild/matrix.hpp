// Dense matrices over any of the library's rings (scalars, ParamPoly,
// Series). Row-major, value semantics.
#pragma once

#include <cstddef>
#include <vector>

#include "mfwild/errors.hpp"

namespace mfwild {

template <class T>
bool is_zero_value(const T& t) {
    if constexpr (requires { t.is_zero(); })
        return t.is_zero();
    else
        return t == T{};
}

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    static Matrix identity(size_t n, const T& one) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw config_error("matrix product dimension mismatch: " + std::to_string(a.rows_) + "x" +
                               std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                               std::to_string(b.cols_));
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_value(aik)) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (is_zero_value(bkj)) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = s * a.d_[i];
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.d_.size(); ++i)
            if (!(a.d_[i] == b.d_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero_matrix() const {
        for (const T& t : d_)
            if (!is_zero_value(t)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void set_block(size_t i0, size_t j0, const Matrix& b) {
        if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_) throw config_error("block out of range");
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix block(size_t i0, size_t j0, size_t r, size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_) throw config_error("block out of range");
        Matrix b(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw config_error("matrix shapes differ");
    }

    size_t rows_, cols_;
    std::vector<T> d_;
};

/// Block-diagonal matrix with `copies` copies of u.
template <class T>
Matrix<T> block_diag_copies(const Matrix<T>& u, size_t copies) {
    Matrix<T> r(u.rows() * copies, u.cols() * copies);
    for (size_t k = 0; k < copies; ++k) r.set_block(k * u.rows(), k * u.cols(), u);
    return r;
}

}  // namespace mfwild
