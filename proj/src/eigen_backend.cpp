#include "bsf/eigen_backend.hpp"

#include <stdexcept>
#include <string>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace bsf {

std::vector<EigenPair> generalized_eigenvalues(const CplxMatrix& x, const CplxMatrix& y) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw std::invalid_argument("generalized eigenvalues need square matrices of equal size");
    lapack_int m = x.rows();
    if (m == 0) return {};

    // det(lambda X + Y) = 0  <=>  det(A - lambda B) = 0 with A = -Y, B = X
    std::vector<Cplx> a(size_t(m) * size_t(m)), b(size_t(m) * size_t(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            a[size_t(j) * size_t(m) + size_t(i)] = -y(i, j);  // column major
            b[size_t(j) * size_t(m) + size_t(i)] = x(i, j);
        }

    const size_t mm = size_t(m);
    std::vector<Cplx> alpha(mm), beta(mm);
    lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', m, a.data(), m, b.data(), m,
                                    alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("zggev failed with info = " + std::to_string(info));

    std::vector<EigenPair> out(mm);
    for (size_t i = 0; i < mm; ++i) out[i] = EigenPair{alpha[i], beta[i]};
    return out;
}

}  // namespace bsf
