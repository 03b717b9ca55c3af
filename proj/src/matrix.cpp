#include "vikit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vikit {

Vec apply(const Matrix& m, const Vec& x) {
  if (m.cols != static_cast<int>(x.size())) {
    throw std::invalid_argument("apply: dimension mismatch (" + std::to_string(m.cols) +
                                " cols vs vector dim " + std::to_string(x.size()) + ")");
  }
  Vec out(static_cast<std::size_t>(m.rows), 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double acc = 0.0;
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[j];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimension mismatch");
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

Matrix symmetric_part(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("symmetric_part: matrix not square");
  Matrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = 0.5 * (m.at(i, j) + m.at(j, i));
  }
  return out;
}

bool all_finite(const Matrix& m) {
  for (double v : m.a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

namespace {

double off_diagonal_norm(const Matrix& s) {
  double acc = 0.0;
  for (int i = 0; i < s.rows; ++i) {
    for (int j = 0; j < s.cols; ++j) {
      if (i != j) acc += s.at(i, j) * s.at(i, j);
    }
  }
  return std::sqrt(acc);
}

double frobenius(const Matrix& s) {
  double acc = 0.0;
  for (double v : s.a) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

SymmetricEigen jacobi_eigen(Matrix s, double tol, int max_sweeps) {
  if (s.rows != s.cols || s.rows < 1) {
    throw std::invalid_argument("jacobi_eigen: matrix must be square and nonempty");
  }
  if (!all_finite(s)) throw std::invalid_argument("jacobi_eigen: non-finite entry");
  const int n = s.rows;
  Matrix v = Matrix::identity(n);
  const double stop = tol * std::max(1.0, frobenius(s));

  int sweep = 0;
  while (off_diagonal_norm(s) > stop) {
    if (++sweep > max_sweeps) {
      throw std::runtime_error("jacobi_eigen: did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = s.at(p, q);
        if (apq == 0.0) continue;
        const double app = s.at(p, p);
        const double aqq = s.at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        // Rotate rows/columns p and q of S, and columns p and q of V.
        for (int k = 0; k < n; ++k) {
          const double skp = s.at(k, p);
          const double skq = s.at(k, q);
          s.at(k, p) = c * skp - sn * skq;
          s.at(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s.at(p, k);
          const double sqk = s.at(q, k);
          s.at(p, k) = c * spk - sn * sqk;
          s.at(q, k) = sn * spk + c * sqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v.at(k, p);
          const double vkq = v.at(k, q);
          v.at(k, p) = c * vkp - sn * vkq;
          v.at(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&s](int i, int j) { return s.at(i, i) < s.at(j, j); });

  SymmetricEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[static_cast<std::size_t>(j)] = s.at(order[static_cast<std::size_t>(j)],
                                                   order[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) {
      out.vectors.at(i, j) = v.at(i, order[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

TopSingular largest_singular(const Matrix& m, double tol) {
  if (m.rows != m.cols) throw std::invalid_argument("largest_singular: matrix not square");
  const auto eig = jacobi_eigen(matmul(transpose(m), m), tol);
  const int n = m.rows;
  TopSingular out;
  out.sigma = std::sqrt(std::max(0.0, eig.values.back()));
  out.right_vector.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.right_vector[static_cast<std::size_t>(i)] = eig.vectors.at(i, n - 1);
  }
  return out;
}

}  // namespace vikit
