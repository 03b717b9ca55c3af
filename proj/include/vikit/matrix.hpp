#pragma once

// Small dense row-major matrices plus a cyclic Jacobi eigensolver for the
// symmetric spectra the operator certificates need (n <= 64 in practice).

#include "vikit/vec.hpp"

namespace vikit {

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

Vec apply(const Matrix& m, const Vec& x);
Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);
/// (M + M^T) / 2
Matrix symmetric_part(const Matrix& m);
bool all_finite(const Matrix& m);

struct SymmetricEigen {
  Vec values;      // ascending
  Matrix vectors;  // column j is the eigenvector for values[j]
};

/// Cyclic Jacobi iteration on a symmetric matrix. Deterministic sweep order;
/// converges to off-diagonal norm <= tol * max(1, ||S||_F).
SymmetricEigen jacobi_eigen(Matrix s, double tol = 1e-12, int max_sweeps = 100);

struct TopSingular {
  double sigma = 0.0;
  Vec right_vector;  // unit right-singular vector for sigma
};

/// Largest singular value of m (spectral norm) via Jacobi on M^T M.
TopSingular largest_singular(const Matrix& m, double tol = 1e-12);

}  // namespace vikit
