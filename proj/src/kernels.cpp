#include "dtm/kernels.hpp"

#include <cmath>

#include "dtm/errors.hpp"

namespace dtm::kernels {

void matvec(const DenseMatrix& a, const std::vector<double>& x, std::vector<double>& y) {
  const int n = a.rows();
  const int m = a.cols();
  if (static_cast<int>(x.size()) != m)
    throw StructuralError("matvec: dimension mismatch");
  y.assign(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double* row = a.row(i);
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

bool cholesky_inplace(DenseMatrix& a, int* fail_index) {
  const int n = a.rows();
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0)) { // catches NaN too
      if (fail_index) *fail_index = j;
      return false;
    }
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    // Rows below j are independent of each other.
#pragma omp parallel for schedule(static)
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      const double* ri = a.row(i);
      const double* rj = a.row(j);
      for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
      a(i, j) = s / ljj;
    }
  }
  return true;
}

void forward_subst(const DenseMatrix& lower, const std::vector<double>& b,
                   std::vector<double>& y) {
  const int n = lower.rows();
  if (static_cast<int>(b.size()) != n)
    throw StructuralError("forward_subst: dimension mismatch");
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    const double* row = lower.row(i);
    for (int k = 0; k < i; ++k) s -= row[k] * y[k];
    y[i] = s / row[i];
  }
}

void backward_subst(const DenseMatrix& lower, const std::vector<double>& y,
                    std::vector<double>& x) {
  const int n = lower.rows();
  if (static_cast<int>(y.size()) != n)
    throw StructuralError("backward_subst: dimension mismatch");
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < n; ++k) s -= lower(k, i) * x[k];
    x[i] = s / lower(i, i);
  }
}

std::vector<double> gauss_solve(DenseMatrix a, std::vector<double> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw StructuralError("gauss_solve: dimension mismatch");
  double scale = a.norm_inf();
  if (scale == 0.0) throw SingularError("gauss_solve: zero matrix");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best <= 1e-14 * scale)
      throw SingularError("gauss_solve: singular matrix at column " + std::to_string(k + 1));
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    const double akk = a(k, k);
    const double* rk = a.row(k);
    const double bk = b[k];
#pragma omp parallel for schedule(static)
    for (int i = k + 1; i < n; ++i) {
      double* ri = a.row(i);
      const double f = ri[k] / akk;
      if (f != 0.0) {
        for (int j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
        b[i] -= f * bk;
      }
      ri[k] = 0.0;
    }
  }
  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    const double* row = a.row(i);
    for (int j = i + 1; j < n; ++j) s -= row[j] * x[j];
    x[i] = s / row[i];
  }
  return x;
}

namespace ref {

void matvec(const DenseMatrix& a, const std::vector<double>& x, std::vector<double>& y) {
  const int n = a.rows();
  const int m = a.cols();
  if (static_cast<int>(x.size()) != m)
    throw StructuralError("matvec: dimension mismatch");
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* row = a.row(i);
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

bool cholesky_inplace(DenseMatrix& a, int* fail_index) {
  const int n = a.rows();
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0)) {
      if (fail_index) *fail_index = j;
      return false;
    }
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      const double* ri = a.row(i);
      const double* rj = a.row(j);
      for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
      a(i, j) = s / ljj;
    }
  }
  return true;
}

std::vector<double> gauss_solve(DenseMatrix a, std::vector<double> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw StructuralError("gauss_solve: dimension mismatch");
  double scale = a.norm_inf();
  if (scale == 0.0) throw SingularError("gauss_solve: zero matrix");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best <= 1e-14 * scale)
      throw SingularError("gauss_solve: singular matrix at column " + std::to_string(k + 1));
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    const double akk = a(k, k);
    const double* rk = a.row(k);
    const double bk = b[k];
    for (int i = k + 1; i < n; ++i) {
      double* ri = a.row(i);
      const double f = ri[k] / akk;
      if (f != 0.0) {
        for (int j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
        b[i] -= f * bk;
      }
      ri[k] = 0.0;
    }
  }
  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    const double* row = a.row(i);
    for (int j = i + 1; j < n; ++j) s -= row[j] * x[j];
    x[i] = s / row[i];
  }
  return x;
}

} // namespace ref

} // namespace dtm::kernels
