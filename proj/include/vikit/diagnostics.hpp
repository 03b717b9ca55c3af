#pragma once

// Executable verification of the uniqueness and rate claims: multi-start
// experiments, sampled VI-gap checks, empirical vs. theoretical contraction
// rates.

#include <cstdint>
#include <string>
#include <vector>

#include "vikit/solvers.hpp"

namespace vikit {

enum class Verdict { singleton, inconclusive };

struct UniquenessReport {
  int starts = 0;
  std::vector<Vec> limits;  // sorted lexicographically
  std::vector<double> residuals;
  double max_pairwise_distance = 0.0;
  double distance_tol = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

/// Runs the projected contraction solver from `starts` random points of C
/// (seed split per start index). Verdict is singleton iff every run converged
/// and the limits pairwise agree within distance_tol; a run that exhausts its
/// iteration budget makes the verdict inconclusive, never an exception.
UniquenessReport uniqueness_experiment(const Problem& problem, int starts,
                                       const SolverConfig& config,
                                       double distance_tol = 1e-6);

/// min over `samples` random v in C of <A(u), v - u>. Nonnegative (up to
/// solver accuracy) exactly when u solves the VI.
double vi_gap_check(const Problem& problem, const Vec& u, int samples,
                    std::uint64_t seed);

struct RateReport {
  double s = 0.0;
  double theoretical_q = 0.0;
  double empirical_q = 0.0;  // sup of successive residual ratios after burn-in
  double margin = 0.0;       // theoretical_q - empirical_q
  bool accepted = false;     // false when s fell outside the step window
  std::string note;
};

/// For each step in s_grid, runs the solver and compares the observed
/// residual-decay ratio (after a 5-iteration burn-in) against q(s). Steps
/// outside the window are reported as rejected entries; the rest still run.
std::vector<RateReport> rate_experiment(const Problem& problem,
                                        const std::vector<double>& s_grid,
                                        const SolverConfig& config);

}  // namespace vikit
