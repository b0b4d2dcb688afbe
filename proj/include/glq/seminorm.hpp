#pragma once

#include "glq/glq_function.hpp"

namespace glq {

/// k(x) = sqrt(2 q_A(x)), +inf outside dom A.
class ExtendedSeminorm {
 public:
  explicit ExtendedSeminorm(LinearRelation A, const Tolerances& tol = {});

  const LinearRelation& relation() const { return q_.relation(); }
  const GlqFunction& form() const { return q_; }
  const GlqFunction& polar_form() const { return qstar_; }

 private:
  GlqFunction q_;
  GlqFunction qstar_;
};

ExtReal seminorm_eval(const ExtendedSeminorm& s, const VectorXd& x, const Tolerances& tol = {});
/// k°(y) = sqrt(2 q_{A^{-1}}(y)).
ExtReal seminorm_polar_eval(const ExtendedSeminorm& s, const VectorXd& y,
                            const Tolerances& tol = {});
/// k^{-1}(0), which equals A^{-1}0.
Subspace seminorm_zero_set(const ExtendedSeminorm& s);

/// <x,y> <= sqrt(<x,Ax>) sqrt(<y,A^{-1}y>) within 1e-12. Throws unless
/// x in dom A and y in ran A.
bool seminorm_cauchy_schwarz_check(const ExtendedSeminorm& s, const VectorXd& x,
                                   const VectorXd& y, const Tolerances& tol = {});

/// q_A(x) <= 1, or q_{A^{-1}}(x) <= 1 when dual is set.
bool polar_set_membership(const ExtendedSeminorm& s, const VectorXd& x, bool dual,
                          const Tolerances& tol = {});

}  // namespace glq
