#include "glq/envelope_inverse.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "glq/errors.hpp"

namespace glq {

std::string to_string(InverseReason r) {
  switch (r) {
    case InverseReason::ok:
      return "ok";
    case InverseReason::gradient_lipschitz_exceeds_r:
      return "gradient_lipschitz_exceeds_r";
  }
  return "unknown";
}

EnvelopeInverseReport invert_envelope(const QuadraticFunction& f, double r,
                                      const Tolerances& tol) {
  if (!(r > 0) || !std::isfinite(r)) throw std::invalid_argument("invert_envelope: r must be > 0");
  const Index n = f.n();
  EnvelopeInverseReport rep;
  rep.lipschitz_bound = f.lipschitz();
  if (rep.lipschitz_bound > r * (1.0 + tol.psd_tol)) {
    rep.reason = InverseReason::gradient_lipschitz_exceeds_r;
    return rep;
  }
  // P = (Q^{-1} - Id/r)^{-1}, all as relations.
  const LinearRelation Qinv = inverse(from_matrix(f.Q()));
  const LinearRelation P = inverse(add(Qinv, scaled_identity(n, -1.0 / r), tol));
  rep.feasible = true;
  rep.g.emplace(P, -f.b() / r, f.b(), f.c() + f.b().squaredNorm() / (2.0 * r), tol);
  return rep;
}

EnvelopeInverse1D invert_envelope_1d(double alpha, double beta, double gamma, double r,
                                     const Tolerances& tol) {
  if (!(alpha >= 0)) throw std::invalid_argument("invert_envelope_1d: alpha must be >= 0");
  if (!(r > 0)) throw std::invalid_argument("invert_envelope_1d: r must be > 0");
  EnvelopeInverse1D out;
  const double half_r = r / 2.0;
  out.report.lipschitz_bound = 2.0 * alpha;
  const VectorXd zero = VectorXd::Zero(1);
  if (std::abs(alpha - half_r) <= tol.psd_tol * half_r) {
    out.kind = EnvelopeInverse1D::Case::indicator;
    out.b = -beta / r;
    out.c = gamma - beta * beta / (2.0 * r);
    out.report.feasible = true;
    out.report.g = point_indicator(VectorXd::Constant(1, out.b), out.c);
  } else if (alpha < half_r) {
    const double d = r - 2.0 * alpha;
    out.kind = EnvelopeInverse1D::Case::quadratic;
    out.a = alpha * r / d;
    out.b = beta * r / d;
    out.c = gamma + beta * beta / (2.0 * d);
    out.report.feasible = true;
    out.report.g.emplace(from_matrix(MatrixXd::Constant(1, 1, 2.0 * out.a)), zero,
                         VectorXd::Constant(1, out.b), out.c, tol);
  } else {
    out.kind = EnvelopeInverse1D::Case::infeasible;
    out.report.reason = InverseReason::gradient_lipschitz_exceeds_r;
  }
  return out;
}

NonexpansiveReport nonexpansive_report(const MatrixXd& M, const Tolerances& tol) {
  if (M.rows() != M.cols()) throw DimensionMismatch("nonexpansive_report: matrix must be square");
  if (M.size() > 0 && (M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("nonexpansive_report: matrix is not symmetric");
  }
  const Index n = M.rows();
  NonexpansiveReport rep;
  if (n == 0) return rep;
  const MatrixXd S = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(S, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol.psd_tol) {
    throw std::invalid_argument("nonexpansive_report: matrix is not positive semidefinite");
  }
  rep.nonexpansive = es.eigenvalues()(n - 1) <= 1.0 + tol.psd_tol;
  rep.firmly = rep.nonexpansive;
  if (rep.nonexpansive) {
    LinearRelation P = add(inverse(from_matrix(S)), scaled_identity(n, -1.0), tol);
    if (!is_maximal_monotone(P, tol)) {
      throw PreconditionViolation("nonexpansive_report: recovered P is not maximally monotone");
    }
    rep.relation_P = std::move(P);
  }
  return rep;
}

}  // namespace glq
