#pragma once

#include "glq/ext_real.hpp"
#include "glq/linear_relation.hpp"
#include "glq/quadratic.hpp"

namespace glq {

/**
 * f(x) = 1/2 <x-a, A(x-a)> + <b,x> + c, +inf when x-a is outside dom A.
 *
 * A must be maximally monotone and symmetric; the constructor throws
 * PreconditionViolation otherwise.
 */
class GlqFunction {
 public:
  GlqFunction(LinearRelation A, VectorXd a, VectorXd b, double c, const Tolerances& tol = {});

  Index n() const { return A_.n(); }
  const LinearRelation& relation() const { return A_; }
  const VectorXd& shift() const { return a_; }
  const VectorXd& linear() const { return b_; }
  double constant() const { return c_; }

 private:
  LinearRelation A_;
  VectorXd a_;
  VectorXd b_;
  double c_;
};

/// (A, 0, 0, 0), i.e. q_A.
GlqFunction pure_quadratic(const LinearRelation& A);
/// iota_{t} + s.
GlqFunction point_indicator(const VectorXd& t, double s);
GlqFunction from_quadratic(const QuadraticFunction& f);

ExtReal evaluate(const GlqFunction& f, const VectorXd& x, const Tolerances& tol = {});
/// A(x-a) + b; empty off dom f.
AffineSet subdifferential(const GlqFunction& f, const VectorXd& x, const Tolerances& tol = {});
/// (A^{-1}, b, a, -<a,b> - c).
GlqFunction conjugate(const GlqFunction& f);

QuadraticFunction envelope(const GlqFunction& f, double r, const Tolerances& tol = {});
VectorXd prox(const GlqFunction& f, double r, const VectorXd& x, const Tolerances& tol = {});
VectorXd envelope_gradient(const GlqFunction& f, double r, const VectorXd& x,
                           const Tolerances& tol = {});

/// Requires equal shifts.
GlqFunction add(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol = {});
/// Requires equal shifts, dom A1 inside dom A2 and A1 - A2 monotone.
GlqFunction subtract(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol = {});
/// Infimal convolution. Requires equal linear terms b1 = b2; shifts add.
GlqFunction inf_convolve(const GlqFunction& f1, const GlqFunction& f2, const Tolerances& tol = {});
/// h with f2 (infimal convolution) h = f1, for f2 with positive definite Q.
GlqFunction star_difference(const GlqFunction& f1, const QuadraticFunction& f2,
                            const Tolerances& tol = {});

/// Largest relative discrepancy between the r = 1 envelopes.
double glq_discrepancy(const GlqFunction& f, const GlqFunction& g);
bool same_glq(const GlqFunction& f, const GlqFunction& g, double tol);

}  // namespace glq
