#pragma once

// Solvers for the variational inequality VI(C, A): find u in C with
// <A(u), v - u> >= 0 for all v in C. Equivalently, u is the unique fixed
// point of T = P_C o (I - s A) for any s > 0.
//
// When A carries a solvable certificate (m = r - gamma*mu^2 > 0), T is a
// strict contraction for every step s in the open window (0, B) with
// B = 2m/mu^2, and its Lipschitz factor is
//
//   q(s) = sqrt(1 - s*mu^2*(B - s)),   0 <= q(s) < 1 on (0, B).
//
// solve_projected_contraction iterates T directly. solve_verma runs the
// relaxed two-step scheme
//
//   y_n     = (1 - b_n) x_n + b_n P_C(x_n - eta A x_n)
//   x_{n+1} = (1 - a_n) x_n + a_n P_C(y_n - rho A y_n)
//
// whose x and y sequences both converge to the same unique solution.
// solve_hybrid_demo composes T with the projection onto a second set and
// shows that such "common element" iterations can only ever reach the one
// VI solution (or fail to find a common element at all).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vikit/convex_set.hpp"
#include "vikit/operators.hpp"
#include "vikit/vec.hpp"

namespace vikit {

struct Problem {
  ConvexSet set;
  OperatorModel op;
  CocoercivityCertificate cert;
};

/// Structural checks: set/operator dimensions agree, set invariants hold.
/// Does not require the certificate to be solvable (certification commands
/// accept unsolvable declarations); solvers check that themselves.
void validate_problem(const Problem& problem);

struct SolverConfig {
  double step = 0.0;  // 0 = auto (optimal_step of the certificate)
  double tol = 1e-10;
  int max_iter = 10000;
  bool record_points = false;
  std::uint64_t seed = 0;
  std::optional<Vec> start;  // projected onto C; default is P_C(origin)
};

struct ConstantSchedule {
  double a = 1.0;
  double b = 1.0;
};

/// a_n = b_n = 1 for n < warmup, then 1/sqrt(n - warmup + 1).
struct HarmonicSchedule {
  int warmup = 0;
};

/// Explicit (a_n, b_n) rows, cycled. Whether sum a_n*b_n diverges cannot be
/// decided from a finite table, so tables carry a warning, never an error.
struct TableSchedule {
  std::vector<std::pair<double, double>> rows;
};

using Schedule = std::variant<ConstantSchedule, HarmonicSchedule, TableSchedule>;

std::pair<double, double> schedule_at(const Schedule& schedule, int n);
/// Enforces 0 <= a_n, b_n <= 1 and rejects schedules with a_n*b_n identically
/// zero (those cannot move the iterate).
void validate_schedule(const Schedule& schedule);
/// True for the builtin schedules, whose weight sums diverge by construction.
bool schedule_divergence_guaranteed(const Schedule& schedule);

enum class SolveStatus { converged, max_iter };

struct TraceRow {
  int iter = 0;
  double residual = 0.0;  // ||x_k - P_C(x_k - s A x_k)||
  double step_len = 0.0;  // ||x_{k+1} - x_k||
  std::optional<Vec> point;
};

struct IterationTrace {
  std::vector<TraceRow> rows;
  SolveStatus status = SolveStatus::max_iter;
};

struct Solution {
  Vec u;
  double residual = 0.0;
  int iterations = 0;
  IterationTrace trace;
};

/// B = 2(r - gamma*mu^2)/mu^2, the supremum of admissible steps.
double step_bound(const CocoercivityCertificate& cert);

/// q(s) for s in the open window (0, step_bound); throws outside it.
double contraction_factor(const CocoercivityCertificate& cert, double s);

/// s* = (r - gamma*mu^2)/mu^2, the minimizer of q(s)^2. At s* the factor is
/// sqrt(1 - m^2/mu^2) (clamped to 0 when the declared m exceeds mu).
double optimal_step(const CocoercivityCertificate& cert);

/// ||x - P_C(x - s A x)||; vanishes exactly at the VI solution for any s > 0.
double fixed_point_residual(const Problem& problem, double s, const Vec& x);

/// config.step == 0 resolves to optimal_step; an explicit step must lie in
/// the open window (0, step_bound).
double resolve_step(const Problem& problem, const SolverConfig& config);

Solution solve_projected_contraction(const Problem& problem,
                                     const SolverConfig& config);

struct VermaResult {
  Vec x_limit;
  Vec y_limit;
  double residual = 0.0;  // fixed-point residual of x_limit at step rho
  int iterations = 0;
  IterationTrace trace;
};

VermaResult solve_verma(const Problem& problem, double rho, double eta,
                        const Schedule& schedule, const SolverConfig& config);

struct HybridResult {
  Solution solution;  // limit of the composed iteration
  Vec plain_limit;    // limit of the plain projected contraction
  /// True when the plain VI solution lies in fix_set, i.e. a common element
  /// exists; the composed iteration then returns that same point.
  bool common_element = false;
};

/// Iterates x_{n+1} = alpha x_n + (1 - alpha) S(P_C(x_n - s A x_n)) with
/// S = projection onto fix_set (a nonexpansive map). alpha in (0, 1).
HybridResult solve_hybrid_demo(const Problem& problem, const ConvexSet& fix_set,
                               double alpha, const SolverConfig& config);

}  // namespace vikit
