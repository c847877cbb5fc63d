#ifndef DTM_KERNELS_HPP
#define DTM_KERNELS_HPP

#include <vector>

#include "dtm/dense.hpp"

// Dense numeric kernels. The primary entry points are OpenMP-parallel; the
// kernels::ref namespace keeps serial implementations with identical
// per-element arithmetic, used as the reference in tests and benchmarks.
// Parallel loops only distribute independent output elements, so both
// variants produce bit-identical results for any thread count.

namespace dtm::kernels {

// y = A * x
void matvec(const DenseMatrix& a, const std::vector<double>& x, std::vector<double>& y);

// In-place lower Cholesky of a symmetric matrix (upper triangle ignored,
// left untouched). Returns true on success; on failure *fail_index is the
// 0-based pivot that was non-positive.
bool cholesky_inplace(DenseMatrix& a, int* fail_index);

// Solve L y = b for lower-triangular L (strictly serial, O(n^2)).
void forward_subst(const DenseMatrix& lower, const std::vector<double>& b,
                   std::vector<double>& y);

// Solve L^T x = y.
void backward_subst(const DenseMatrix& lower, const std::vector<double>& y,
                    std::vector<double>& x);

// Gaussian elimination with partial pivoting; throws SingularError.
// Independent of the Cholesky path so the two can cross-check.
std::vector<double> gauss_solve(DenseMatrix a, std::vector<double> b);

namespace ref {

void matvec(const DenseMatrix& a, const std::vector<double>& x, std::vector<double>& y);
bool cholesky_inplace(DenseMatrix& a, int* fail_index);
std::vector<double> gauss_solve(DenseMatrix a, std::vector<double> b);

} // namespace ref

} // namespace dtm::kernels

#endif
