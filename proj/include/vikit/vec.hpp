#pragma once

// Dense real coordinate vectors (the ambient space R^n) and the handful of
// BLAS-level helpers the solvers need. Everything is allocation-per-call;
// problem sizes here are desk scale.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vikit {

using Vec = std::vector<double>;

inline void check_same_dim(const Vec& x, const Vec& y, const char* where) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
}

inline bool all_finite(const Vec& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline void check_finite(const Vec& x, const char* where) {
  if (!all_finite(x)) {
    throw std::runtime_error(std::string(where) + ": non-finite coordinate");
  }
}

inline double inner(const Vec& x, const Vec& y) {
  check_same_dim(x, y, "inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline double norm(const Vec& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

inline double dist(const Vec& x, const Vec& y) {
  check_same_dim(x, y, "dist");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec sub(const Vec& x, const Vec& y) {
  check_same_dim(x, y, "sub");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

inline Vec add(const Vec& x, const Vec& y) {
  check_same_dim(x, y, "add");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

/// alpha*x + y
inline Vec axpy(double alpha, const Vec& x, const Vec& y) {
  check_same_dim(x, y, "axpy");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + y[i];
  return out;
}

/// a*x + b*y
inline Vec lincomb(double a, const Vec& x, double b, const Vec& y) {
  check_same_dim(x, y, "lincomb");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

inline Vec scaled(double alpha, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

}  // namespace vikit
