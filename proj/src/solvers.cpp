#include "vikit/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vikit {

void validate_problem(const Problem& problem) {
  validate_set(problem.set);
  validate_operator(problem.op);
  if (set_dim(problem.set) != op_dim(problem.op)) {
    throw std::invalid_argument("problem: set dim " + std::to_string(set_dim(problem.set)) +
                                " does not match operator dim " +
                                std::to_string(op_dim(problem.op)));
  }
  if (!(problem.cert.mu > 0.0)) {
    throw std::invalid_argument("problem: certificate requires mu > 0");
  }
  if (problem.cert.gamma < 0.0) {
    throw std::invalid_argument("problem: certificate requires gamma >= 0");
  }
}

namespace {

void require_solvable(const CocoercivityCertificate& cert, const char* where) {
  if (!solvable(cert)) {
    throw std::invalid_argument(
        std::string(where) +
        ": certificate unsolvable, requires r > gamma*mu^2 (r = " +
        std::to_string(cert.r) + ", gamma*mu^2 = " +
        std::to_string(cert.gamma * cert.mu * cert.mu) + ")");
  }
}

void check_config(const SolverConfig& config) {
  if (!(config.tol > 0.0)) throw std::invalid_argument("config: tol must be > 0");
  if (config.max_iter < 1) throw std::invalid_argument("config: max_iter must be >= 1");
}

Vec starting_point(const Problem& problem, const SolverConfig& config) {
  if (config.start) {
    check_finite(*config.start, "start");
    return project(problem.set, *config.start);
  }
  return project(problem.set, zeros(static_cast<std::size_t>(set_dim(problem.set))));
}

void check_iterate_finite(const Vec& x) {
  if (!all_finite(x)) {
    throw std::runtime_error(
        "solver: non-finite iterate (operator behaves worse than its certificate)");
  }
}

}  // namespace

double step_bound(const CocoercivityCertificate& cert) {
  require_solvable(cert, "step_bound");
  return 2.0 * effective_modulus(cert) / (cert.mu * cert.mu);
}

double contraction_factor(const CocoercivityCertificate& cert, double s) {
  const double bound = step_bound(cert);
  if (!(s > 0.0) || !(s < bound)) {
    throw std::invalid_argument("contraction_factor: step " + std::to_string(s) +
                                " outside the admissible window (0, " +
                                std::to_string(bound) + ")");
  }
  const double q2 = 1.0 - s * cert.mu * cert.mu * (bound - s);
  return std::sqrt(std::max(0.0, q2));
}

double optimal_step(const CocoercivityCertificate& cert) {
  require_solvable(cert, "optimal_step");
  return effective_modulus(cert) / (cert.mu * cert.mu);
}

double fixed_point_residual(const Problem& problem, double s, const Vec& x) {
  if (!(s > 0.0)) throw std::invalid_argument("fixed_point_residual: s must be > 0");
  const Vec ax = evaluate(problem.op, x);
  return dist(x, project(problem.set, axpy(-s, ax, x)));
}

double resolve_step(const Problem& problem, const SolverConfig& config) {
  if (config.step == 0.0) return optimal_step(problem.cert);
  const double bound = step_bound(problem.cert);
  if (!(config.step > 0.0) || !(config.step < bound)) {
    throw std::invalid_argument("step " + std::to_string(config.step) +
                                " outside the admissible window (0, " +
                                std::to_string(bound) + ")");
  }
  return config.step;
}

Solution solve_projected_contraction(const Problem& problem,
                                     const SolverConfig& config) {
  validate_problem(problem);
  check_config(config);
  require_solvable(problem.cert, "solve_projected_contraction");
  const double s = resolve_step(problem, config);

  Vec x = starting_point(problem, config);
  Solution out;
  out.trace.status = SolveStatus::max_iter;
  out.trace.rows.reserve(static_cast<std::size_t>(std::min(config.max_iter, 4096)));

  for (int k = 0; k < config.max_iter; ++k) {
    const Vec ax = evaluate(problem.op, x);
    const Vec xn = project(problem.set, axpy(-s, ax, x));
    check_iterate_finite(xn);
    const double res = dist(x, xn);

    TraceRow row{k, res, res, std::nullopt};
    if (config.record_points) row.point = x;
    out.trace.rows.push_back(std::move(row));

    x = xn;
    out.iterations = k + 1;
    if (res <= config.tol) {
      out.trace.status = SolveStatus::converged;
      break;
    }
  }

  out.u = std::move(x);
  out.residual = fixed_point_residual(problem, s, out.u);
  return out;
}

std::pair<double, double> schedule_at(const Schedule& schedule, int n) {
  if (n < 0) throw std::invalid_argument("schedule_at: negative index");
  return std::visit(
      [n](const auto& s) -> std::pair<double, double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantSchedule>) {
          return {s.a, s.b};
        } else if constexpr (std::is_same_v<T, HarmonicSchedule>) {
          if (n < s.warmup) return {1.0, 1.0};
          const double t = 1.0 / std::sqrt(static_cast<double>(n - s.warmup + 1));
          return {t, t};
        } else {
          return s.rows[static_cast<std::size_t>(n) % s.rows.size()];
        }
      },
      schedule);
}

void validate_schedule(const Schedule& schedule) {
  const auto check_weights = [](double a, double b) {
    if (!(a >= 0.0) || !(a <= 1.0) || !(b >= 0.0) || !(b <= 1.0)) {
      throw std::invalid_argument("schedule: weights must lie in [0, 1]");
    }
  };
  if (const auto* c = std::get_if<ConstantSchedule>(&schedule)) {
    check_weights(c->a, c->b);
    if (c->a * c->b == 0.0) {
      throw std::invalid_argument(
          "schedule: constant weights with a*b == 0 can never converge");
    }
  } else if (const auto* h = std::get_if<HarmonicSchedule>(&schedule)) {
    if (h->warmup < 0) throw std::invalid_argument("schedule: warmup must be >= 0");
  } else {
    const auto& t = std::get<TableSchedule>(schedule);
    if (t.rows.empty()) throw std::invalid_argument("schedule: empty table");
    bool any_positive = false;
    for (const auto& [a, b] : t.rows) {
      check_weights(a, b);
      any_positive = any_positive || (a * b > 0.0);
    }
    if (!any_positive) {
      throw std::invalid_argument(
          "schedule: table with a_n*b_n identically zero can never converge");
    }
  }
}

bool schedule_divergence_guaranteed(const Schedule& schedule) {
  return !std::holds_alternative<TableSchedule>(schedule);
}

VermaResult solve_verma(const Problem& problem, double rho, double eta,
                        const Schedule& schedule, const SolverConfig& config) {
  validate_problem(problem);
  check_config(config);
  require_solvable(problem.cert, "solve_verma");
  validate_schedule(schedule);
  const double bound = step_bound(problem.cert);
  for (const auto [name, value] : {std::pair{"rho", rho}, std::pair{"eta", eta}}) {
    if (!(value > 0.0) || !(value < bound)) {
      throw std::invalid_argument(std::string("solve_verma: ") + name + " = " +
                                  std::to_string(value) +
                                  " outside the admissible window (0, " +
                                  std::to_string(bound) + ")");
    }
  }

  Vec x = starting_point(problem, config);
  VermaResult out;
  out.trace.status = SolveStatus::max_iter;

  for (int n = 0; n < config.max_iter; ++n) {
    const auto [a, b] = schedule_at(schedule, n);
    const Vec ax = evaluate(problem.op, x);
    const Vec p_eta = project(problem.set, axpy(-eta, ax, x));
    const Vec p_rho = project(problem.set, axpy(-rho, ax, x));
    const double res_eta = dist(x, p_eta);
    const double res_rho = dist(x, p_rho);
    const Vec y = lincomb(1.0 - b, x, b, p_eta);

    // Both residuals below tol certifies x; y then sits within b*tol of x.
    if (std::max(res_eta, res_rho) <= config.tol) {
      TraceRow row{n, res_rho, 0.0, std::nullopt};
      if (config.record_points) row.point = x;
      out.trace.rows.push_back(std::move(row));
      out.trace.status = SolveStatus::converged;
      out.x_limit = x;
      out.y_limit = y;
      out.residual = res_rho;
      out.iterations = n;
      return out;
    }

    const Vec ay = evaluate(problem.op, y);
    const Vec xn = lincomb(1.0 - a, x, a, project(problem.set, axpy(-rho, ay, y)));
    check_iterate_finite(xn);

    TraceRow row{n, res_rho, dist(x, xn), std::nullopt};
    if (config.record_points) row.point = x;
    out.trace.rows.push_back(std::move(row));

    x = xn;
    out.iterations = n + 1;
  }

  // Budget exhausted: report the state reached.
  const auto [a, b] = schedule_at(schedule, config.max_iter);
  const Vec ax = evaluate(problem.op, x);
  const Vec p_eta = project(problem.set, axpy(-eta, ax, x));
  out.x_limit = x;
  out.y_limit = lincomb(1.0 - b, x, b, p_eta);
  out.residual = dist(x, project(problem.set, axpy(-rho, ax, x)));
  return out;
}

HybridResult solve_hybrid_demo(const Problem& problem, const ConvexSet& fix_set,
                               double alpha, const SolverConfig& config) {
  validate_problem(problem);
  check_config(config);
  require_solvable(problem.cert, "solve_hybrid_demo");
  validate_set(fix_set);
  if (set_dim(fix_set) != set_dim(problem.set)) {
    throw std::invalid_argument("solve_hybrid_demo: fix_set dimension mismatch");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("solve_hybrid_demo: alpha must lie in (0, 1)");
  }
  const double s = resolve_step(problem, config);

  // Lipschitz factor of x -> alpha x + (1-alpha) S(T x); stopping on step
  // lengths below tol*(1 - L) puts the iterate within tol of the fixed point.
  const double level = alpha + (1.0 - alpha) * contraction_factor(problem.cert, s);
  const double step_stop = config.tol * (1.0 - level);

  Vec x = starting_point(problem, config);
  HybridResult out;
  out.solution.trace.status = SolveStatus::max_iter;

  for (int k = 0; k < config.max_iter; ++k) {
    const Vec ax = evaluate(problem.op, x);
    const Vec t = project(problem.set, axpy(-s, ax, x));
    const double res = dist(x, t);
    const Vec xn = lincomb(alpha, x, 1.0 - alpha, project(fix_set, t));
    check_iterate_finite(xn);
    const double step_len = dist(x, xn);

    TraceRow row{k, res, step_len, std::nullopt};
    if (config.record_points) row.point = x;
    out.solution.trace.rows.push_back(std::move(row));

    x = xn;
    out.solution.iterations = k + 1;
    if (step_len <= step_stop) {
      out.solution.trace.status = SolveStatus::converged;
      break;
    }
  }

  out.solution.u = std::move(x);
  out.solution.residual = fixed_point_residual(problem, s, out.solution.u);

  SolverConfig plain = config;
  out.plain_limit = solve_projected_contraction(problem, plain).u;
  out.common_element = contains(fix_set, out.plain_limit, 1e-8);
  return out;
}

}  // namespace vikit
