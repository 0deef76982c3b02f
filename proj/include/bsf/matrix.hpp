#ifndef BSF_MATRIX_HPP
#define BSF_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bsf/scalars.hpp"

namespace bsf {

// Dense row-major matrix over an exact or floating field. Immutable in
// spirit: operations return fresh values; operator() gives element access
// during construction.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(size_t(rows) * cols, field<T>::zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = field<T>::one();
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const T& x : data_)
            if (!field<T>::is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int l = 0; l < cols_; ++l) {
                const T& a = (*this)(i, l);
                if (field<T>::is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(l, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = field<T>::conj((*this)(i, j));
        return r;
    }

    Matrix submatrix(int i0, int j0, int nrows, int ncols) const {
        if (i0 < 0 || j0 < 0 || i0 + nrows > rows_ || j0 + ncols > cols_)
            throw std::invalid_argument("submatrix out of range");
        Matrix r(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }
    void paste(int i0, int j0, const Matrix& m) {
        if (i0 < 0 || j0 < 0 || i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
            throw std::invalid_argument("paste out of range");
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }
    void add_at(int i0, int j0, const Matrix& m) {
        if (i0 < 0 || j0 < 0 || i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
            throw std::invalid_argument("add_at out of range");
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) += m(i, j);
    }

    // Gaussian elimination; exact over the rational field.
    int rank() const {
        Matrix a = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = a.pick_pivot(r, c);
            if (p < 0) continue;
            a.swap_rows(r, p);
            for (int i = r + 1; i < rows_; ++i) {
                if (field<T>::is_zero(a(i, c))) continue;
                T f = a(i, c) / a(r, c);
                for (int j = c; j < cols_; ++j) a(i, j) -= f * a(r, j);
            }
            ++r;
        }
        return r;
    }

    T determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        Matrix a = *this;
        T det = field<T>::one();
        for (int c = 0; c < cols_; ++c) {
            int p = a.pick_pivot(c, c);
            if (p < 0) return field<T>::zero();
            if (p != c) {
                a.swap_rows(c, p);
                det = -det;
            }
            det = det * a(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (field<T>::is_zero(a(i, c))) continue;
                T f = a(i, c) / a(c, c);
                for (int j = c; j < cols_; ++j) a(i, j) -= f * a(c, j);
            }
        }
        return det;
    }

    bool is_nonsingular() const {
        if (rows_ != cols_) return false;
        return !field<T>::is_zero(determinant());
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        int n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (int c = 0; c < n; ++c) {
            int p = a.pick_pivot(c, c);
            if (p < 0) throw std::domain_error("matrix is singular");
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            T piv = a(c, c);
            for (int j = 0; j < n; ++j) {
                a(c, j) = a(c, j) / piv;
                inv(c, j) = inv(c, j) / piv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == c || field<T>::is_zero(a(i, c))) continue;
                T f = a(i, c);
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(c, j);
                    inv(i, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    // Kronecker product, used for P (x) I_n style block liftings.
    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (field<T>::is_zero(a(i, j))) continue;
                for (int p = 0; p < b.rows_; ++p)
                    for (int q = 0; q < b.cols_; ++q)
                        r(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
            }
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    // First nonzero pivot for exact fields, largest magnitude otherwise.
    int pick_pivot(int from_row, int col) const {
        if constexpr (field<T>::exact) {
            for (int i = from_row; i < rows_; ++i)
                if (!field<T>::is_zero((*this)(i, col))) return i;
            return -1;
        } else {
            int best = -1;
            double best_mag = 0.0;
            for (int i = from_row; i < rows_; ++i) {
                double m = std::abs((*this)(i, col));
                if (m > best_mag) {
                    best_mag = m;
                    best = i;
                }
            }
            return best;
        }
    }

    int rows_, cols_;
    std::vector<T> data_;
};

// Block-transpose of a constant matrix viewed as a grid of n x n blocks:
// the grid is transposed, the blocks themselves are not.
template <class T>
Matrix<T> block_transpose(const Matrix<T>& m, int n) {
    if (n <= 0 || m.rows() % n != 0 || m.cols() % n != 0)
        throw std::invalid_argument("block_transpose: dimensions not a multiple of block size");
    int br = m.rows() / n, bc = m.cols() / n;
    Matrix<T> r(m.cols(), m.rows());
    for (int i = 0; i < br; ++i)
        for (int j = 0; j < bc; ++j)
            r.paste(j * n, i * n, m.submatrix(i * n, j * n, n, n));
    return r;
}

using RatMatrix = Matrix<Rat>;
using CplxMatrix = Matrix<Cplx>;

inline CplxMatrix to_cplx(const RatMatrix& m) {
    CplxMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = to_cplx(m(i, j));
    return r;
}

}  // namespace bsf

#endif
