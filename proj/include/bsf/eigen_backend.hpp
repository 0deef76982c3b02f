#ifndef BSF_EIGEN_BACKEND_HPP
#define BSF_EIGEN_BACKEND_HPP

#include <vector>

#include "bsf/matrix.hpp"

namespace bsf {

// One generalized eigenvalue as a projective pair: lambda = alpha/beta with
// beta = 0 encoding the point at infinity.
struct EigenPair {
    Cplx alpha;
    Cplx beta;
};

// Generalized eigenvalues of the pencil lambda*X + Y, i.e. the roots of
// det(lambda*X + Y). This wraps the QZ-class routine of the numeric
// environment and is the library's single external numeric dependency.
std::vector<EigenPair> generalized_eigenvalues(const CplxMatrix& x, const CplxMatrix& y);

}  // namespace bsf

#endif
