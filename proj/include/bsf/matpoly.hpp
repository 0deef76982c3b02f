#ifndef BSF_MATPOLY_HPP
#define BSF_MATPOLY_HPP

#include <stdexcept>
#include <vector>

#include "bsf/matrix.hpp"

namespace bsf {

// Matrix polynomial sum A_i lambda^i with explicit grade: the coefficient
// list always has grade+1 entries, so grade may exceed degree. Square for
// the pencil constructions; rectangular instances carry minimal bases.
template <class T>
class MatrixPolynomial {
public:
    MatrixPolynomial() : rows_(0), cols_(0), grade_(-1) {}

    MatrixPolynomial(int rows, int cols, int grade)
        : rows_(rows), cols_(cols), grade_(grade),
          coeffs_(size_t(grade) + 1, Matrix<T>(rows, cols)) {
        if (grade < 0) throw std::invalid_argument("negative grade");
    }

    explicit MatrixPolynomial(std::vector<Matrix<T>> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("empty coefficient list");
        rows_ = coeffs_[0].rows();
        cols_ = coeffs_[0].cols();
        grade_ = int(coeffs_.size()) - 1;
        for (const auto& c : coeffs_)
            if (c.rows() != rows_ || c.cols() != cols_)
                throw std::invalid_argument("coefficient shapes differ");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int grade() const { return grade_; }

    // Block dimension of a square polynomial.
    int n() const {
        if (rows_ != cols_) throw std::invalid_argument("matrix polynomial is not square");
        return rows_;
    }

    const Matrix<T>& coeff(int i) const {
        if (i < 0 || i > grade_) throw std::out_of_range("coefficient index");
        return coeffs_[size_t(i)];
    }
    Matrix<T>& coeff(int i) {
        if (i < 0 || i > grade_) throw std::out_of_range("coefficient index");
        return coeffs_[size_t(i)];
    }

    // Largest d with A_d != 0; -1 for the zero polynomial.
    int degree() const {
        for (int d = grade_; d >= 0; --d)
            if (!coeffs_[size_t(d)].is_zero()) return d;
        return -1;
    }

    bool operator==(const MatrixPolynomial& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && grade_ == o.grade_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const MatrixPolynomial& o) const { return !(*this == o); }

    Matrix<T> evaluate(const T& x) const {
        Matrix<T> acc = coeffs_[size_t(grade_)];
        for (int i = grade_ - 1; i >= 0; --i) acc = acc * x + coeffs_[size_t(i)];
        return acc;
    }

    // Coefficient list reversed in place of lambda^k P(1/lambda).
    MatrixPolynomial reversal() const {
        std::vector<Matrix<T>> rev(coeffs_.rbegin(), coeffs_.rend());
        return MatrixPolynomial(std::move(rev));
    }

    // Grade k-1 truncation dropping the leading coefficient.
    MatrixPolynomial truncate_low() const {
        require_positive_grade();
        std::vector<Matrix<T>> c(coeffs_.begin(), coeffs_.end() - 1);
        return MatrixPolynomial(std::move(c));
    }

    // Coefficients A_1..A_{k-1}, grade k-2.
    MatrixPolynomial middle_part() const {
        if (grade_ < 2)
            throw std::invalid_argument("middle_part requires grade >= 2");
        std::vector<Matrix<T>> c(coeffs_.begin() + 1, coeffs_.end() - 1);
        return MatrixPolynomial(std::move(c));
    }

    // (k-1)th Horner shift: coefficients A_1..A_k, grade k-1.
    MatrixPolynomial horner_shift() const {
        require_positive_grade();
        std::vector<Matrix<T>> c(coeffs_.begin() + 1, coeffs_.end());
        return MatrixPolynomial(std::move(c));
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (const auto& a : coeffs_)
            if (a != a.transpose()) return false;
        return true;
    }

    bool is_hermitian() const {
        if constexpr (!field<T>::complex_capable)
            throw std::domain_error("hermitian check requires a complex-capable field");
        if (rows_ != cols_) return false;
        for (const auto& a : coeffs_)
            if (a != a.conj_transpose()) return false;
        return true;
    }

    MatrixPolynomial operator+(const MatrixPolynomial& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("polynomial shape mismatch");
        int g = std::max(grade_, o.grade_);
        MatrixPolynomial r(rows_, cols_, g);
        for (int i = 0; i <= grade_; ++i) r.coeffs_[size_t(i)] += coeffs_[size_t(i)];
        for (int i = 0; i <= o.grade_; ++i) r.coeffs_[size_t(i)] += o.coeffs_[size_t(i)];
        return r;
    }
    MatrixPolynomial operator-() const {
        MatrixPolynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    MatrixPolynomial operator-(const MatrixPolynomial& o) const { return *this + (-o); }

    MatrixPolynomial operator*(const MatrixPolynomial& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("polynomial product shape mismatch");
        MatrixPolynomial r(rows_, o.cols_, grade_ + o.grade_);
        for (int i = 0; i <= grade_; ++i)
            for (int j = 0; j <= o.grade_; ++j)
                r.coeffs_[size_t(i + j)] += coeffs_[size_t(i)] * o.coeffs_[size_t(j)];
        return r;
    }

    MatrixPolynomial transpose() const {
        std::vector<Matrix<T>> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_) c.push_back(a.transpose());
        return MatrixPolynomial(std::move(c));
    }

    // Re-grades to exactly g, padding with zero coefficients; throws if a
    // dropped coefficient is nonzero.
    MatrixPolynomial with_grade(int g) const {
        if (g < degree()) throw std::invalid_argument("grade below degree");
        MatrixPolynomial r(rows_, cols_, g);
        for (int i = 0; i <= std::min(g, grade_); ++i) r.coeffs_[size_t(i)] = coeffs_[size_t(i)];
        return r;
    }

private:
    void require_positive_grade() const {
        if (grade_ < 1) throw std::invalid_argument("operation requires grade >= 1");
    }

    int rows_, cols_, grade_;
    std::vector<Matrix<T>> coeffs_;
};

using RatPoly = MatrixPolynomial<Rat>;
using CplxPoly = MatrixPolynomial<Cplx>;

inline CplxPoly to_cplx(const RatPoly& p) {
    std::vector<CplxMatrix> c;
    c.reserve(size_t(p.grade()) + 1);
    for (int i = 0; i <= p.grade(); ++i) c.push_back(to_cplx(p.coeff(i)));
    return CplxPoly(std::move(c));
}

}  // namespace bsf

#endif
