#include "glq/glq_function.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "glq/errors.hpp"

namespace glq {

namespace {

void require_positive_r(double r) {
  if (!(r > 0) || !std::isfinite(r)) throw std::invalid_argument("prox parameter r must be > 0");
}

void require_same_n(const GlqFunction& f, const VectorXd& x) {
  if (x.size() != f.n()) throw DimensionMismatch("argument dimension does not match function");
}

bool same_vector(const VectorXd& u, const VectorXd& v, const Tolerances& tol) {
  return (u - v).norm() <= tol.value_tol * std::max({1.0, u.norm(), v.norm()});
}

MatrixXd symmetrized(const MatrixXd& M) { return 0.5 * (M + M.transpose()); }

}  // namespace

GlqFunction::GlqFunction(LinearRelation A, VectorXd a, VectorXd b, double c, const Tolerances& tol)
    : A_(std::move(A)), a_(std::move(a)), b_(std::move(b)), c_(c) {
  if (a_.size() != A_.n() || b_.size() != A_.n()) {
    throw DimensionMismatch("glq: shift and linear term must have length n");
  }
  if (!a_.allFinite() || !b_.allFinite() || !std::isfinite(c_)) {
    throw std::invalid_argument("glq: non-finite coefficients");
  }
  if (!is_maximal_monotone(A_, tol) || !is_symmetric(A_, tol)) {
    throw PreconditionViolation("glq: relation must be maximally monotone and symmetric");
  }
}

GlqFunction pure_quadratic(const LinearRelation& A) {
  return GlqFunction(A, VectorXd::Zero(A.n()), VectorXd::Zero(A.n()), 0.0);
}

GlqFunction point_indicator(const VectorXd& t, double s) {
  const Index n = t.size();
  return GlqFunction(normal_cone_of(Subspace(n)), t, VectorXd::Zero(n), s);
}

GlqFunction from_quadratic(const QuadraticFunction& f) {
  return GlqFunction(from_matrix(f.Q()), VectorXd::Zero(f.n()), f.b(), f.c());
}

ExtReal evaluate(const GlqFunction& f, const VectorXd& x, const Tolerances& tol) {
  require_same_n(f, x);
  const VectorXd z = x - f.shift();
  const LinearRelation& A = f.relation();
  if (!A.in_domain(z, tol)) return ExtReal::plus_infinity();
  const VectorXd zd = project(A.dom(), z);
  return 0.5 * zd.dot(A.selection() * zd) + f.linear().dot(x) + f.constant();
}

AffineSet subdifferential(const GlqFunction& f, const VectorXd& x, const Tolerances& tol) {
  require_same_n(f, x);
  AffineSet s = f.relation().apply(x - f.shift(), tol);
  if (!s.empty) s.point += f.linear();
  return s;
}

GlqFunction conjugate(const GlqFunction& f) {
  return GlqFunction(inverse(f.relation()), f.linear(), f.shift(),
                     -f.shift().dot(f.linear()) - f.constant());
}

QuadraticFunction envelope(const GlqFunction& f, double r, const Tolerances& tol) {
  require_positive_r(r);
  const Index n = f.n();
  // M = (Id + r A^{-1})^{-1} = Id - (Id + A/r)^{-1}
  const MatrixXd J = resolvent(scale(f.relation(), 1.0 / r, tol), tol);
  const MatrixXd M = symmetrized(MatrixXd::Identity(n, n) - J);
  const VectorXd s = f.shift() + f.linear() / r;
  const VectorXd Ms = M * s;
  const MatrixXd Q = r * M;
  const VectorXd lin = -r * Ms + f.linear();
  const double c = 0.5 * r * s.dot(Ms) - f.linear().squaredNorm() / (2.0 * r) + f.constant();
  return QuadraticFunction(Q, lin, c, tol);
}

VectorXd prox(const GlqFunction& f, double r, const VectorXd& x, const Tolerances& tol) {
  require_positive_r(r);
  require_same_n(f, x);
  const MatrixXd J = resolvent(scale(f.relation(), 1.0 / r, tol), tol);
  return f.shift() + J * (x - f.shift() - f.linear() / r);
}

VectorXd envelope_gradient(const GlqFunction& f, double r, const VectorXd& x,
                           const Tolerances& tol) {
  return r * (x - prox(f, r, x, tol));
}

GlqFunction add(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol) {
  if (f1.n() != f2.n()) throw DimensionMismatch("add: functions on different spaces");
  if (!same_vector(f1.shift(), f2.shift(), tol)) {
    throw PreconditionViolation("add: shifts differ; the sum is only closed for equal shifts");
  }
  return GlqFunction(add(f1.relation(), f2.relation(), tol), f1.shift(),
                     f1.linear() + f2.linear(), f1.constant() + f2.constant(), tol);
}

GlqFunction subtract(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol) {
  if (f1.n() != f2.n()) throw DimensionMismatch("subtract: functions on different spaces");
  if (!same_vector(f1.shift(), f2.shift(), tol)) {
    throw PreconditionViolation("subtract: shifts differ");
  }
  if (!is_contained(f1.relation().dom(), f2.relation().dom(), std::sqrt(tol.value_tol))) {
    throw PreconditionViolation(
        "subtract: dom A1 is not contained in dom A2, so q_A1 - q_A2 takes the value "
        "finite - inf (e.g. Id minus the normal cone of R x {0} at (0,1))");
  }
  const LinearRelation D = subtract(f1.relation(), f2.relation(), tol);
  if (!is_monotone(D, tol) || !is_maximal_monotone(D, tol)) {
    throw PreconditionViolation("subtract: A1 - A2 is not maximally monotone");
  }
  return GlqFunction(D, f1.shift(), f1.linear() - f2.linear(), f1.constant() - f2.constant(),
                     tol);
}

GlqFunction inf_convolve(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol) {
  if (f1.n() != f2.n()) throw DimensionMismatch("inf_convolve: functions on different spaces");
  if (!same_vector(f1.linear(), f2.linear(), tol)) {
    throw PreconditionViolation(
        "inf_convolve: linear terms differ, the infimal convolution is identically -inf");
  }
  // (f1* + f2*)* with both conjugates sharing the shift b.
  const LinearRelation P =
      inverse(add(inverse(f1.relation()), inverse(f2.relation()), tol));
  return GlqFunction(P, f1.shift() + f2.shift(), f1.linear(), f1.constant() + f2.constant(),
                     tol);
}

GlqFunction star_difference(const GlqFunction& f1, const QuadraticFunction& f2,
                            const Tolerances& tol) {
  if (f1.n() != f2.n()) throw DimensionMismatch("star_difference: functions on different spaces");
  const Index n = f1.n();
  Eigen::LLT<MatrixXd> llt(f2.Q());
  if (llt.info() != Eigen::Success) {
    throw PreconditionViolation("star_difference: Q2 must be positive definite");
  }
  const MatrixXd W = symmetrized(llt.solve(MatrixXd::Identity(n, n)));
  const LinearRelation D = add(inverse(f1.relation()), from_matrix(-W), tol);
  if (!is_maximal_monotone(D, tol)) {
    throw PreconditionViolation("star_difference: A1^{-1} - A2^{-1} is not monotone");
  }
  const VectorXd delta = f1.linear() - f2.b();
  const VectorXd Wd = W * delta;
  const VectorXd u = f1.shift() - Wd;
  const double c = f1.constant() - f2.c() + 0.5 * delta.dot(Wd);
  return GlqFunction(inverse(D), u, f1.linear(), c, tol);
}

double glq_discrepancy(const GlqFunction& f, const GlqFunction& g) {
  if (f.n() != g.n()) throw DimensionMismatch("glq_discrepancy: dimension");
  return quadratic_discrepancy(envelope(f, 1.0), envelope(g, 1.0));
}

bool same_glq(const GlqFunction& f, const GlqFunction& g, double tol) {
  return f.n() == g.n() && glq_discrepancy(f, g) <= tol;
}

}  // namespace glq
