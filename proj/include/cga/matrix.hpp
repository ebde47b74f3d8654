#ifndef CGA_MATRIX_HPP
#define CGA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cga/errors.hpp"

namespace cga {

// Dense matrix over an arbitrary commutative-coefficient ring element type R.
// R needs +, -, *, is_zero(); division-based routines additionally need
// inverse().  Matrices are value types.
template <class R>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const R& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const R& zero, const R& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        check_shape(o, rows_, cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_shape(o, rows_, cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw precondition_error("matrix dimension mismatch");
        Matrix r(rows_, o.cols_, e_[0] - e_[0]); // zero of the ring
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = e_[0] - e_[0] - x;
        return r;
    }
    Matrix scaled(const R& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }
    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!(e_[i] - o.e_[i]).is_zero()) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix pow(unsigned n, const R& zero, const R& one) const {
        Matrix acc = identity(rows_, zero, one);
        for (unsigned i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> e_;
    void check_shape(const Matrix& o, std::size_t r, std::size_t c) const {
        if (o.rows_ != r || o.cols_ != c) throw precondition_error("matrix dimension mismatch");
    }
};

// Gauss-Jordan inverse over a field-like R (needs inverse()).
template <class R>
std::optional<Matrix<R>> try_inverse(const Matrix<R>& m, const R& zero, const R& one) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<R> a = m;
    Matrix<R> inv = Matrix<R>::identity(n, zero, one);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        R s = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            R f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

template <class R>
Matrix<R> inverse(const Matrix<R>& m, const R& zero, const R& one) {
    auto r = try_inverse(m, zero, one);
    if (!r) throw precondition_error("matrix is singular");
    return *r;
}

// Row-echelon rank over a field-like R.
template <class R>
std::size_t rank(Matrix<R> a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(rank, j));
        R s = a.at(rank, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(rank, j) = a.at(rank, j) * s;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a.at(i, col).is_zero()) continue;
            R f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Determinant by fraction-producing Gaussian elimination (field-like R).
template <class R>
R det(Matrix<R> a, const R& zero, const R& one) {
    if (a.rows() != a.cols()) throw precondition_error("determinant of a non-square matrix");
    std::size_t n = a.rows();
    R d = one;
    bool neg = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return zero;
        if (piv != col) {
            neg = !neg;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
        }
        d = d * a.at(col, col);
        R s = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            R f = a.at(i, col) * s;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return neg ? zero - d : d;
}

} // namespace cga

#endif
