#ifndef DTM_EIGEN_HPP
#define DTM_EIGEN_HPP

#include <complex>
#include <vector>

#include "dtm/dense.hpp"

namespace dtm {

// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations,
// returned in ascending order. Throws StructuralError if not symmetric.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a);

// Eigenvalues of a general real square matrix: Householder reduction to
// Hessenberg form followed by the shifted QR iteration. Used where a
// second, Jacobi-independent eigenvalue route is required. Returned
// sorted by (real, imag).
std::vector<std::complex<double>> general_eigenvalues(const DenseMatrix& a);

} // namespace dtm

#endif
