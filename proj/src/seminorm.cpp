#include "glq/seminorm.hpp"

#include <algorithm>
#include <cmath>

#include "glq/errors.hpp"

namespace glq {

namespace {

ExtReal root_of_twice(ExtReal q) {
  if (q.is_plus_infinity()) return q;
  return std::sqrt(std::max(0.0, 2.0 * q.value()));
}

}  // namespace

ExtendedSeminorm::ExtendedSeminorm(LinearRelation A, const Tolerances& tol)
    : q_(pure_quadratic(A)), qstar_(conjugate(q_)) {
  (void)tol;
}

ExtReal seminorm_eval(const ExtendedSeminorm& s, const VectorXd& x, const Tolerances& tol) {
  return root_of_twice(evaluate(s.form(), x, tol));
}

ExtReal seminorm_polar_eval(const ExtendedSeminorm& s, const VectorXd& y, const Tolerances& tol) {
  return root_of_twice(evaluate(s.polar_form(), y, tol));
}

Subspace seminorm_zero_set(const ExtendedSeminorm& s) {
  return inverse(s.relation()).multivalued_part();
}

bool seminorm_cauchy_schwarz_check(const ExtendedSeminorm& s, const VectorXd& x,
                                   const VectorXd& y, const Tolerances& tol) {
  const ExtReal kx = seminorm_eval(s, x, tol);
  const ExtReal ky = seminorm_polar_eval(s, y, tol);
  if (kx.is_plus_infinity()) throw PreconditionViolation("Cauchy-Schwarz check: x is not in dom A");
  if (ky.is_plus_infinity()) throw PreconditionViolation("Cauchy-Schwarz check: y is not in ran A");
  // sqrt(<x,Ax>) = k(x) and sqrt(<y,A^{-1}y>) = k°(y).
  return x.dot(y) <= kx.value() * ky.value() + 1e-12;
}

bool polar_set_membership(const ExtendedSeminorm& s, const VectorXd& x, bool dual,
                          const Tolerances& tol) {
  const ExtReal v = evaluate(dual ? s.polar_form() : s.form(), x, tol);
  return v <= ExtReal(1.0 + tol.value_tol);
}

}  // namespace glq
