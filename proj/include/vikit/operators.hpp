#pragma once

// The mapping A : C -> H together with its monotonicity/Lipschitz
// certificate (gamma, r, mu):
//
//   <Ax - Ay, x - y> >= -gamma*||Ax - Ay||^2 + r*||x - y||^2   (cocoercivity)
//   ||Ax - Ay||      <= mu*||x - y||                           (Lipschitz)
//
// Combining the two gives strong monotonicity with effective modulus
// m = r - gamma*mu^2; every solver in this kit requires m > 0.
//
// Affine operators get analytic certificates. Host-supplied (external)
// operators carry user-declared certificates that sampling can falsify but
// never prove.

#include <cstdint>
#include <functional>
#include <variant>

#include "vikit/convex_set.hpp"
#include "vikit/matrix.hpp"
#include "vikit/vec.hpp"

namespace vikit {

/// A(x) = M x + shift
struct AffineOperator {
  Matrix m;
  Vec shift;
};

/// Host-supplied evaluation procedure. Must be deterministic (equal inputs
/// give equal outputs) and safe for concurrent calls; the library never
/// caches evaluations.
struct ExternalOperator {
  std::function<Vec(const Vec&)> eval;
  int dim = 0;
};

using OperatorModel = std::variant<AffineOperator, ExternalOperator>;

int op_dim(const OperatorModel& op);
void validate_operator(const OperatorModel& op);

/// A(x). Affine is exact in double precision; a non-finite result from an
/// external operator throws std::runtime_error.
Vec evaluate(const OperatorModel& op, const Vec& x);

struct CocoercivityCertificate {
  double gamma = 0.0;
  double r = 0.0;
  double mu = 0.0;
};

/// m = r - gamma*mu^2. Positive iff the certificate admits a solver.
double effective_modulus(const CocoercivityCertificate& cert);
bool solvable(const CocoercivityCertificate& cert);

/// Analytic certificate for an affine operator: mu is the largest singular
/// value of M, r the smallest eigenvalue of (M + M^T)/2, gamma = 0. When that
/// eigenvalue is <= 0 the returned certificate is unsolvable (no positive r
/// exists with gamma = 0). Throws for the zero matrix (mu must be positive).
CocoercivityCertificate affine_certificate(const AffineOperator& op);

struct CertifyReport {
  long pairs = 0;  // random pairs plus any deterministic directional pairs
  long lipschitz_violations = 0;
  long cocoercivity_violations = 0;
  /// min over all pairs and both inequalities of (LHS - RHS); a certificate
  /// consistent with the samples keeps this above -tau_c.
  double worst_margin = 0.0;
};

/// Draws `samples` pairs (x, y) in `domain` (seed split per pair index) and
/// counts violations of the Lipschitz and relaxed-cocoercivity inequalities
/// with slack tau_c = 1e-9 * (1 + ||x - y||^2). For affine operators the
/// extreme eigendirections of the symmetric part and the top right-singular
/// direction are added as deterministic pairs, so a certificate tighter than
/// the analytic one gets falsified independently of the seed. Zero violations
/// is necessary, not sufficient, evidence for the certificate.
CertifyReport certify_by_sampling(const OperatorModel& op,
                                  const CocoercivityCertificate& cert,
                                  const ConvexSet& domain, int samples,
                                  std::uint64_t seed);

}  // namespace vikit
