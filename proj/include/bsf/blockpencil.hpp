#ifndef BSF_BLOCKPENCIL_HPP
#define BSF_BLOCKPENCIL_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bsf/matpoly.hpp"
#include "bsf/matrix.hpp"

namespace bsf {

// Grid of n x n blocks, each an affine pair lambda*X + Y. May be
// rectangular (K_s is s x (s+1) blocks).
template <class T>
class BlockPencil {
public:
    BlockPencil() : n_(0), brows_(0), bcols_(0) {}
    BlockPencil(int n, int brows, int bcols)
        : n_(n), brows_(brows), bcols_(bcols),
          lam_(brows * n, bcols * n), cst_(brows * n, bcols * n) {
        if (n <= 0) throw std::invalid_argument("block size must be positive");
    }
    BlockPencil(int n, Matrix<T> lam, Matrix<T> cst)
        : n_(n), lam_(std::move(lam)), cst_(std::move(cst)) {
        if (n <= 0) throw std::invalid_argument("block size must be positive");
        if (lam_.rows() != cst_.rows() || lam_.cols() != cst_.cols())
            throw std::invalid_argument("lambda/constant part shape mismatch");
        if (lam_.rows() % n != 0 || lam_.cols() % n != 0)
            throw std::invalid_argument("pencil dimensions not a multiple of block size");
        brows_ = lam_.rows() / n;
        bcols_ = lam_.cols() / n;
    }

    int n() const { return n_; }
    int block_rows() const { return brows_; }
    int block_cols() const { return bcols_; }
    bool square() const { return brows_ == bcols_; }

    const Matrix<T>& lambda_part() const { return lam_; }
    const Matrix<T>& const_part() const { return cst_; }
    Matrix<T>& lambda_part() { return lam_; }
    Matrix<T>& const_part() { return cst_; }

    Matrix<T> block_lambda(int i, int j) const { return lam_.submatrix(i * n_, j * n_, n_, n_); }
    Matrix<T> block_const(int i, int j) const { return cst_.submatrix(i * n_, j * n_, n_, n_); }
    void set_block(int i, int j, const Matrix<T>& l, const Matrix<T>& c) {
        lam_.paste(i * n_, j * n_, l);
        cst_.paste(i * n_, j * n_, c);
    }

    bool operator==(const BlockPencil& o) const {
        return n_ == o.n_ && lam_ == o.lam_ && cst_ == o.cst_;
    }
    bool operator!=(const BlockPencil& o) const { return !(*this == o); }

    Matrix<T> evaluate(const T& x) const { return lam_ * x + cst_; }

    BlockPencil operator+(const BlockPencil& o) const {
        require_same_blocking(o);
        return BlockPencil(n_, lam_ + o.lam_, cst_ + o.cst_);
    }
    BlockPencil operator-(const BlockPencil& o) const {
        require_same_blocking(o);
        return BlockPencil(n_, lam_ - o.lam_, cst_ - o.cst_);
    }
    BlockPencil operator-() const { return BlockPencil(n_, -lam_, -cst_); }

    // Multiplication by constant matrices on either side.
    friend BlockPencil operator*(const Matrix<T>& a, const BlockPencil& p) {
        return BlockPencil(p.n_, a * p.lam_, a * p.cst_);
    }
    friend BlockPencil operator*(const BlockPencil& p, const Matrix<T>& a) {
        return BlockPencil(p.n_, p.lam_ * a, p.cst_ * a);
    }

    // Subgrid of whole blocks.
    BlockPencil block_window(int i0, int j0, int nbr, int nbc) const {
        return BlockPencil(n_, lam_.submatrix(i0 * n_, j0 * n_, nbr * n_, nbc * n_),
                           cst_.submatrix(i0 * n_, j0 * n_, nbr * n_, nbc * n_));
    }
    void paste_window(int i0, int j0, const BlockPencil& p) {
        lam_.paste(i0 * n_, j0 * n_, p.lam_);
        cst_.paste(i0 * n_, j0 * n_, p.cst_);
    }
    void add_window(int i0, int j0, const BlockPencil& p) {
        lam_.add_at(i0 * n_, j0 * n_, p.lam_);
        cst_.add_at(i0 * n_, j0 * n_, p.cst_);
    }

    MatrixPolynomial<T> as_polynomial() const {
        return MatrixPolynomial<T>(std::vector<Matrix<T>>{cst_, lam_});
    }

private:
    void require_same_blocking(const BlockPencil& o) const {
        if (n_ != o.n_ || brows_ != o.brows_ || bcols_ != o.bcols_)
            throw std::invalid_argument("block pencil shape mismatch");
    }

    int n_, brows_, bcols_;
    Matrix<T> lam_, cst_;
};

// One-based permutation of {1..k}; the associated block matrix has its
// (c_i, i) block equal to I_n.
struct BlockPermutation {
    std::vector<int> c;  // one-based images
    int n = 1;

    BlockPermutation() = default;
    BlockPermutation(std::vector<int> perm, int block_size) : c(std::move(perm)), n(block_size) {
        validate();
    }

    int k() const { return int(c.size()); }

    static BlockPermutation identity(int k, int n) {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 1);
        return BlockPermutation(std::move(v), n);
    }
    // (k:1), the block-sip reversal.
    static BlockPermutation reversal(int k, int n) {
        std::vector<int> v(k);
        for (int i = 0; i < k; ++i) v[size_t(i)] = k - i;
        return BlockPermutation(std::move(v), n);
    }

    BlockPermutation inverse() const {
        std::vector<int> v(c.size());
        for (int i = 0; i < k(); ++i) v[size_t(c[size_t(i)] - 1)] = i + 1;
        return BlockPermutation(std::move(v), n);
    }
    // Composition matching matrix product of the associated block matrices.
    BlockPermutation compose(const BlockPermutation& rhs) const {
        if (k() != rhs.k()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> v(c.size());
        for (int i = 0; i < k(); ++i) v[size_t(i)] = c[size_t(rhs.c[size_t(i)] - 1)];
        return BlockPermutation(std::move(v), n);
    }

    void validate() const {
        std::vector<bool> seen(c.size(), false);
        for (int x : c) {
            if (x < 1 || x > k() || seen[size_t(x - 1)])
                throw std::invalid_argument("not a permutation of 1..k");
            seen[size_t(x - 1)] = true;
        }
    }
};

template <class T>
Matrix<T> permutation_matrix(const BlockPermutation& p) {
    int k = p.k(), n = p.n;
    Matrix<T> m(k * n, k * n);
    for (int i = 0; i < k; ++i)
        for (int d = 0; d < n; ++d)
            m((p.c[size_t(i)] - 1) * n + d, i * n + d) = field<T>::one();
    return m;
}

template <class T>
BlockPencil<T> block_transpose(const BlockPencil<T>& m) {
    int n = m.n();
    BlockPencil<T> r(n, m.block_cols(), m.block_rows());
    for (int i = 0; i < m.block_rows(); ++i)
        for (int j = 0; j < m.block_cols(); ++j)
            r.set_block(j, i, m.block_lambda(i, j), m.block_const(i, j));
    return r;
}

template <class T>
bool is_block_symmetric(const BlockPencil<T>& m) {
    if (!m.square()) return false;
    return block_transpose(m) == m;
}

// (Pi_c)^B L Pi_c; block (i,j) of the result is block (c_i, c_j) of L.
template <class T>
BlockPencil<T> congruence(const BlockPencil<T>& l, const BlockPermutation& p) {
    if (!l.square()) throw std::invalid_argument("congruence requires a square pencil");
    if (p.k() != l.block_rows() || p.n != l.n())
        throw std::invalid_argument("permutation/pencil size mismatch");
    int k = p.k();
    BlockPencil<T> r(l.n(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int ci = p.c[size_t(i)] - 1, cj = p.c[size_t(j)] - 1;
            r.set_block(i, j, l.block_lambda(ci, cj), l.block_const(ci, cj));
        }
    return r;
}

// Row permutation only: (Pi_c)^B L, block row i of the result is row c_i.
template <class T>
BlockPencil<T> permute_rows(const BlockPencil<T>& l, const BlockPermutation& p) {
    if (p.k() != l.block_rows() || p.n != l.n())
        throw std::invalid_argument("permutation/pencil size mismatch");
    BlockPencil<T> r(l.n(), l.block_rows(), l.block_cols());
    for (int i = 0; i < p.k(); ++i)
        for (int j = 0; j < l.block_cols(); ++j) {
            int ci = p.c[size_t(i)] - 1;
            r.set_block(i, j, l.block_lambda(ci, j), l.block_const(ci, j));
        }
    return r;
}

// Column permutation only: L Pi_c, block column j of the result is column c_j.
template <class T>
BlockPencil<T> permute_cols(const BlockPencil<T>& l, const BlockPermutation& p) {
    if (p.k() != l.block_cols() || p.n != l.n())
        throw std::invalid_argument("permutation/pencil size mismatch");
    BlockPencil<T> r(l.n(), l.block_rows(), l.block_cols());
    for (int i = 0; i < l.block_rows(); ++i)
        for (int j = 0; j < p.k(); ++j) {
            int cj = p.c[size_t(j)] - 1;
            r.set_block(i, j, l.block_lambda(i, cj), l.block_const(i, cj));
        }
    return r;
}

}  // namespace bsf

#endif
