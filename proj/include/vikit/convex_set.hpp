#pragma once

// Canonical closed convex sets with closed-form Euclidean projections.
//
// The projection P_C(x) is the unique nearest point of C; it is nonexpansive
// and characterized by <x - P_C(x), P_C(x) - y> >= 0 for every y in C. That
// characterization is an executable contract here: projection_gap() estimates
// the left-hand side minimum by sampling.

#include <cstdint>
#include <string>
#include <variant>

#include "vikit/rng.hpp"
#include "vikit/vec.hpp"

namespace vikit {

struct WholeSpace {
  int dim = 1;
};

/// { x : lower_i <= x_i <= upper_i }
struct Box {
  Vec lower;
  Vec upper;
};

/// { x : ||x - center|| <= radius }
struct Ball {
  Vec center;
  double radius = 1.0;
};

/// { x : <normal, x> <= offset }
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// { x : <normal, x> == offset }
struct Hyperplane {
  Vec normal;
  double offset = 0.0;
};

/// { x : x_i >= 0, sum_i x_i == scale }
struct Simplex {
  int dim = 1;
  double scale = 1.0;
};

using ConvexSet =
    std::variant<WholeSpace, Box, Ball, Halfspace, Hyperplane, Simplex>;

int set_dim(const ConvexSet& set);
std::string set_kind(const ConvexSet& set);

/// Throws std::invalid_argument when a structural invariant fails
/// (box bounds crossed, nonpositive radius/scale, zero normal, ...).
void validate_set(const ConvexSet& set);

/// Nearest point of `set` to `x`.
Vec project(const ConvexSet& set, const Vec& x);

/// True iff x violates every defining constraint of `set` by at most `tol`.
/// Halfspace/Hyperplane violations are measured as Euclidean distance, so the
/// tolerance is comparable across normals of different magnitude.
bool contains(const ConvexSet& set, const Vec& x, double tol);

/// Pseudo-random point of the set. Box is uniform per coordinate, Ball is
/// exactly uniform (Gaussian direction, radius r*U^(1/n)), Simplex is uniform
/// via sorted-uniform spacings, WholeSpace is standard normal, and
/// Halfspace/Hyperplane draw Gaussians around a representative point and
/// project them onto the set.
Vec sample_point(const ConvexSet& set, Rng& rng);

/// Deterministic representative point (strictly interior where the set has
/// interior; for Hyperplane, the projection of the origin).
Vec representative_point(const ConvexSet& set);

/// min over `samples` pseudo-random y in `set` of <x - u, u - y>.
/// Nonnegative (up to rounding) exactly when u = project(set, x).
double projection_gap(const ConvexSet& set, const Vec& x, const Vec& u,
                      int samples, std::uint64_t seed);

}  // namespace vikit
