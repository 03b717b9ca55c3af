#include "vikit/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vikit {

int op_dim(const OperatorModel& op) {
  if (const auto* a = std::get_if<AffineOperator>(&op)) return a->m.rows;
  return std::get<ExternalOperator>(op).dim;
}

void validate_operator(const OperatorModel& op) {
  if (const auto* a = std::get_if<AffineOperator>(&op)) {
    if (a->m.rows != a->m.cols || a->m.rows < 1) {
      throw std::invalid_argument("affine operator: matrix must be square and nonempty");
    }
    if (!all_finite(a->m)) throw std::invalid_argument("affine operator: non-finite matrix entry");
    if (static_cast<int>(a->shift.size()) != a->m.rows) {
      throw std::invalid_argument("affine operator: shift dimension mismatch");
    }
    check_finite(a->shift, "affine operator shift");
  } else {
    const auto& e = std::get<ExternalOperator>(op);
    if (e.dim < 1) throw std::invalid_argument("external operator: dim must be >= 1");
    if (!e.eval) throw std::invalid_argument("external operator: missing evaluation procedure");
  }
}

Vec evaluate(const OperatorModel& op, const Vec& x) {
  if (op_dim(op) != static_cast<int>(x.size())) {
    throw std::invalid_argument("evaluate: dimension mismatch (operator dim " +
                                std::to_string(op_dim(op)) + " vs vector dim " +
                                std::to_string(x.size()) + ")");
  }
  if (const auto* a = std::get_if<AffineOperator>(&op)) {
    return add(apply(a->m, x), a->shift);
  }
  const auto& e = std::get<ExternalOperator>(op);
  Vec out = e.eval(x);
  if (static_cast<int>(out.size()) != e.dim) {
    throw std::runtime_error("evaluate: external operator returned wrong dimension");
  }
  if (!all_finite(out)) {
    throw std::runtime_error("evaluate: external operator returned non-finite value");
  }
  return out;
}

double effective_modulus(const CocoercivityCertificate& cert) {
  return cert.r - cert.gamma * cert.mu * cert.mu;
}

bool solvable(const CocoercivityCertificate& cert) {
  return effective_modulus(cert) > 0.0;
}

CocoercivityCertificate affine_certificate(const AffineOperator& op) {
  validate_operator(OperatorModel(op));
  const TopSingular top = largest_singular(op.m);
  if (top.sigma == 0.0) {
    throw std::invalid_argument(
        "affine_certificate: zero matrix has no positive Lipschitz constant");
  }
  const SymmetricEigen eig = jacobi_eigen(symmetric_part(op.m));
  return CocoercivityCertificate{0.0, eig.values.front(), top.sigma};
}

namespace {

struct PairAccumulator {
  const OperatorModel& op;
  const CocoercivityCertificate& cert;
  CertifyReport report;

  void consume(const Vec& x, const Vec& y) {
    const Vec d = sub(x, y);
    const Vec ad = sub(evaluate(op, x), evaluate(op, y));
    const double nd2 = inner(d, d);
    const double nad = norm(ad);
    const double tau = 1e-9 * (1.0 + nd2);

    const double lip_margin = cert.mu * std::sqrt(nd2) - nad;
    const double coco_margin =
        inner(ad, d) + cert.gamma * nad * nad - cert.r * nd2;

    if (lip_margin < -tau) ++report.lipschitz_violations;
    if (coco_margin < -tau) ++report.cocoercivity_violations;
    report.worst_margin = std::min({report.worst_margin, lip_margin, coco_margin});
    ++report.pairs;
  }
};

Vec eigen_column(const Matrix& vectors, int j) {
  Vec out(static_cast<std::size_t>(vectors.rows));
  for (int i = 0; i < vectors.rows; ++i) out[static_cast<std::size_t>(i)] = vectors.at(i, j);
  return out;
}

}  // namespace

CertifyReport certify_by_sampling(const OperatorModel& op,
                                  const CocoercivityCertificate& cert,
                                  const ConvexSet& domain, int samples,
                                  std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("certify_by_sampling: samples must be >= 1");
  if (op_dim(op) != set_dim(domain)) {
    throw std::invalid_argument("certify_by_sampling: operator/domain dimension mismatch");
  }

  PairAccumulator acc{op, cert, CertifyReport{}};
  acc.report.worst_margin = std::numeric_limits<double>::infinity();

  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::split(seed, static_cast<std::uint64_t>(k));
    const Vec x = sample_point(domain, rng);
    const Vec y = sample_point(domain, rng);
    acc.consume(x, y);
  }

  // Deterministic pairs along the extremal directions of an affine operator.
  if (const auto* a = std::get_if<AffineOperator>(&op)) {
    const SymmetricEigen eig = jacobi_eigen(symmetric_part(a->m));
    const TopSingular top = largest_singular(a->m);
    const Vec base = project(domain, representative_point(domain));
    const Vec dirs[] = {eigen_column(eig.vectors, 0),
                        eigen_column(eig.vectors, a->m.rows - 1), top.right_vector};
    for (const Vec& dir : dirs) {
      for (double eps : {1.0, 0.1, 0.01}) {
        for (double sign : {1.0, -1.0}) {
          const Vec probe = project(domain, axpy(sign * eps, dir, base));
          if (dist(probe, base) == 0.0) continue;  // direction left the set entirely
          acc.consume(probe, base);
        }
      }
    }
  }

  return acc.report;
}

}  // namespace vikit
