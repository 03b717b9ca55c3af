#include "vikit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vikit {

UniquenessReport uniqueness_experiment(const Problem& problem, int starts,
                                       const SolverConfig& config,
                                       double distance_tol) {
  validate_problem(problem);
  if (starts < 2) throw std::invalid_argument("uniqueness_experiment: starts must be >= 2");

  UniquenessReport report;
  report.starts = starts;
  report.distance_tol = distance_tol;

  bool all_converged = true;
  for (int i = 0; i < starts; ++i) {
    Rng rng = Rng::split(config.seed, static_cast<std::uint64_t>(i));
    SolverConfig run = config;
    run.start = sample_point(problem.set, rng);
    const Solution sol = solve_projected_contraction(problem, run);
    all_converged = all_converged && sol.trace.status == SolveStatus::converged;
    report.limits.push_back(sol.u);
    report.residuals.push_back(sol.residual);
  }

  // Order-independent aggregation.
  std::sort(report.limits.begin(), report.limits.end());

  double max_dist = 0.0;
  for (std::size_t i = 0; i < report.limits.size(); ++i) {
    for (std::size_t j = i + 1; j < report.limits.size(); ++j) {
      max_dist = std::max(max_dist, dist(report.limits[i], report.limits[j]));
    }
  }
  report.max_pairwise_distance = max_dist;

  const bool residuals_ok =
      std::all_of(report.residuals.begin(), report.residuals.end(),
                  [&config](double r) { return r <= config.tol; });
  report.verdict = (all_converged && residuals_ok && max_dist <= distance_tol)
                       ? Verdict::singleton
                       : Verdict::inconclusive;
  return report;
}

double vi_gap_check(const Problem& problem, const Vec& u, int samples,
                    std::uint64_t seed) {
  validate_problem(problem);
  if (samples < 1) throw std::invalid_argument("vi_gap_check: samples must be >= 1");
  if (static_cast<int>(u.size()) != set_dim(problem.set)) {
    throw std::invalid_argument("vi_gap_check: dimension mismatch");
  }
  const Vec au = evaluate(problem.op, u);
  double gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::split(seed, static_cast<std::uint64_t>(k));
    const Vec v = sample_point(problem.set, rng);
    gap = std::min(gap, inner(au, sub(v, u)));
  }
  return gap;
}

std::vector<RateReport> rate_experiment(const Problem& problem,
                                        const std::vector<double>& s_grid,
                                        const SolverConfig& config) {
  validate_problem(problem);
  const double bound = step_bound(problem.cert);
  constexpr int kBurnIn = 5;
  // Ratios whose denominator sits at the double-precision noise floor say
  // nothing about the contraction; skip them.
  constexpr double kRatioFloor = 1e-13;

  std::vector<RateReport> reports;
  reports.reserve(s_grid.size());
  for (double s : s_grid) {
    RateReport rep;
    rep.s = s;
    if (!(s > 0.0) || !(s < bound)) {
      rep.accepted = false;
      rep.note = "step outside the admissible window";
      reports.push_back(std::move(rep));
      continue;
    }
    rep.accepted = true;
    rep.theoretical_q = contraction_factor(problem.cert, s);

    SolverConfig run = config;
    run.step = s;
    const Solution sol = solve_projected_contraction(problem, run);
    if (sol.trace.status != SolveStatus::converged) rep.note = "hit max_iter";

    double sup_ratio = 0.0;
    const auto& rows = sol.trace.rows;
    for (std::size_t k = kBurnIn; k + 1 < rows.size(); ++k) {
      const double denom = rows[k].residual;
      if (denom < kRatioFloor) continue;
      sup_ratio = std::max(sup_ratio, rows[k + 1].residual / denom);
    }
    rep.empirical_q = sup_ratio;
    rep.margin = rep.theoretical_q - rep.empirical_q;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace vikit
