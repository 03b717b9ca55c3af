#include "vikit/convex_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vikit {

namespace {

void check_set_dim(const ConvexSet& set, const Vec& x, const char* where) {
  if (set_dim(set) != static_cast<int>(x.size())) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (set dim " +
                                std::to_string(set_dim(set)) + " vs vector dim " +
                                std::to_string(x.size()) + ")");
  }
}

// Sort-and-threshold simplex projection. Stable sort keeps tied entries in
// original index order, so the output is deterministic.
Vec project_simplex(const Simplex& s, const Vec& x) {
  const int n = s.dim;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&x](int i, int j) { return x[i] > x[j]; });

  double cumsum = 0.0;
  double theta = 0.0;
  for (int j = 0; j < n; ++j) {
    cumsum += x[order[j]];
    const double t = (cumsum - s.scale) / static_cast<double>(j + 1);
    if (x[order[j]] - t > 0.0) theta = t;
  }
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = std::max(x[i] - theta, 0.0);
  return out;
}

}  // namespace

int set_dim(const ConvexSet& set) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) return s.dim;
        if constexpr (std::is_same_v<T, Box>) return static_cast<int>(s.lower.size());
        if constexpr (std::is_same_v<T, Ball>) return static_cast<int>(s.center.size());
        if constexpr (std::is_same_v<T, Halfspace>) return static_cast<int>(s.normal.size());
        if constexpr (std::is_same_v<T, Hyperplane>) return static_cast<int>(s.normal.size());
        if constexpr (std::is_same_v<T, Simplex>) return s.dim;
      },
      set);
}

std::string set_kind(const ConvexSet& set) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) return "whole_space";
        if constexpr (std::is_same_v<T, Box>) return "box";
        if constexpr (std::is_same_v<T, Ball>) return "ball";
        if constexpr (std::is_same_v<T, Halfspace>) return "halfspace";
        if constexpr (std::is_same_v<T, Hyperplane>) return "hyperplane";
        if constexpr (std::is_same_v<T, Simplex>) return "simplex";
      },
      set);
}

void validate_set(const ConvexSet& set) {
  if (set_dim(set) < 1) throw std::invalid_argument("set: dimension must be >= 1");
  if (const auto* b = std::get_if<Box>(&set)) {
    check_same_dim(b->lower, b->upper, "box bounds");
    check_finite(b->lower, "box lower");
    check_finite(b->upper, "box upper");
    for (std::size_t i = 0; i < b->lower.size(); ++i) {
      if (b->lower[i] > b->upper[i]) {
        throw std::invalid_argument("box: lower[" + std::to_string(i) +
                                    "] exceeds upper[" + std::to_string(i) + "]");
      }
    }
  } else if (const auto* b = std::get_if<Ball>(&set)) {
    check_finite(b->center, "ball center");
    if (!(b->radius > 0.0) || !std::isfinite(b->radius)) {
      throw std::invalid_argument("ball: radius must be > 0");
    }
  } else if (const auto* h = std::get_if<Halfspace>(&set)) {
    check_finite(h->normal, "halfspace normal");
    if (!std::isfinite(h->offset)) throw std::invalid_argument("halfspace: non-finite offset");
    if (!(norm(h->normal) > 0.0)) throw std::invalid_argument("halfspace: zero normal");
  } else if (const auto* h = std::get_if<Hyperplane>(&set)) {
    check_finite(h->normal, "hyperplane normal");
    if (!std::isfinite(h->offset)) throw std::invalid_argument("hyperplane: non-finite offset");
    if (!(norm(h->normal) > 0.0)) throw std::invalid_argument("hyperplane: zero normal");
  } else if (const auto* s = std::get_if<Simplex>(&set)) {
    if (!(s->scale > 0.0) || !std::isfinite(s->scale)) {
      throw std::invalid_argument("simplex: scale must be > 0");
    }
  }
}

Vec project(const ConvexSet& set, const Vec& x) {
  check_set_dim(set, x, "project");
  return std::visit(
      [&x](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return x;
        } else if constexpr (std::is_same_v<T, Box>) {
          Vec out(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) {
            out[i] = std::min(std::max(x[i], s.lower[i]), s.upper[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Ball>) {
          const Vec d = sub(x, s.center);
          const double nd = norm(d);
          if (nd <= s.radius) return x;  // includes x == center
          return axpy(s.radius / nd, d, s.center);
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          const double g = inner(s.normal, x) - s.offset;
          if (g <= 0.0) return x;
          const double nn2 = inner(s.normal, s.normal);
          return axpy(-g / nn2, s.normal, x);
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          const double g = inner(s.normal, x) - s.offset;
          const double nn2 = inner(s.normal, s.normal);
          return axpy(-g / nn2, s.normal, x);
        } else {
          return project_simplex(s, x);
        }
      },
      set);
}

bool contains(const ConvexSet& set, const Vec& x, double tol) {
  check_set_dim(set, x, "contains");
  if (tol < 0.0) throw std::invalid_argument("contains: tol must be >= 0");
  return std::visit(
      [&x, tol](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return true;
        } else if constexpr (std::is_same_v<T, Box>) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < s.lower[i] - tol || x[i] > s.upper[i] + tol) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return dist(x, s.center) <= s.radius + tol;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          return (inner(s.normal, x) - s.offset) / norm(s.normal) <= tol;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          return std::abs(inner(s.normal, x) - s.offset) / norm(s.normal) <= tol;
        } else {
          double sum = 0.0;
          for (double v : x) {
            if (v < -tol) return false;
            sum += v;
          }
          return std::abs(sum - s.scale) <= tol;
        }
      },
      set);
}

Vec representative_point(const ConvexSet& set) {
  return std::visit(
      [&set](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return zeros(s.dim);
        } else if constexpr (std::is_same_v<T, Box>) {
          Vec out(s.lower.size());
          for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = 0.5 * (s.lower[i] + s.upper[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return s.center;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          // One unit inside from the boundary point nearest the origin.
          const Vec boundary = project(set, zeros(s.normal.size()));
          return axpy(-1.0 / norm(s.normal), s.normal, boundary);
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          return project(set, zeros(s.normal.size()));
        } else {
          return Vec(s.dim, s.scale / static_cast<double>(s.dim));
        }
      },
      set);
}

Vec sample_point(const ConvexSet& set, Rng& rng) {
  return std::visit(
      [&rng, &set](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          Vec out(s.dim);
          for (auto& v : out) v = rng.gaussian();
          return out;
        } else if constexpr (std::is_same_v<T, Box>) {
          Vec out(s.lower.size());
          for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = rng.uniform(s.lower[i], s.upper[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Ball>) {
          const int n = static_cast<int>(s.center.size());
          Vec dir(n);
          double nd = 0.0;
          do {
            for (auto& v : dir) v = rng.gaussian();
            nd = norm(dir);
          } while (nd == 0.0);
          const double radius =
              s.radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
          return axpy(radius / nd, dir, s.center);
        } else if constexpr (std::is_same_v<T, Halfspace> ||
                             std::is_same_v<T, Hyperplane>) {
          const Vec base = representative_point(set);
          Vec z(base.size());
          for (std::size_t i = 0; i < z.size(); ++i) z[i] = base[i] + rng.gaussian();
          return project(set, z);
        } else {
          // Spacings of sorted uniforms give a uniform point of the simplex.
          const int n = s.dim;
          std::vector<double> knots(static_cast<std::size_t>(n) + 1);
          knots[0] = 0.0;
          knots[static_cast<std::size_t>(n)] = 1.0;
          for (int i = 1; i < n; ++i) knots[static_cast<std::size_t>(i)] = rng.uniform();
          std::sort(knots.begin() + 1, knots.end() - 1);
          Vec out(n);
          for (int i = 0; i < n; ++i) {
            out[i] = s.scale * (knots[static_cast<std::size_t>(i) + 1] -
                                knots[static_cast<std::size_t>(i)]);
          }
          return out;
        }
      },
      set);
}

double projection_gap(const ConvexSet& set, const Vec& x, const Vec& u,
                      int samples, std::uint64_t seed) {
  check_set_dim(set, x, "projection_gap");
  check_same_dim(x, u, "projection_gap");
  if (samples < 1) throw std::invalid_argument("projection_gap: samples must be >= 1");
  const Vec w = sub(x, u);
  double gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::split(seed, static_cast<std::uint64_t>(k));
    const Vec y = sample_point(set, rng);
    gap = std::min(gap, inner(w, sub(u, y)));
  }
  return gap;
}

}  // namespace vikit
