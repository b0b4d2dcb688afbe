#pragma once

#include "glq/subspace.hpp"

namespace glq {

/**
 * h(x) = 1/2 <x,Hx> + <g,x> + kappa, with extrema over Euclidean balls
 * computed from one eigendecomposition of H.
 */
class BallQuadratic {
 public:
  BallQuadratic(const MatrixXd& H, const VectorXd& g, double kappa);

  /// min over ||x|| <= radius, via the concave dual of the trust-region problem.
  double min_on_ball(double radius) const;
  double max_on_ball(double radius) const;
  /// max over the ball of |h|.
  double sup_abs_on_ball(double radius) const;

 private:
  static double dual_min(const VectorXd& lambda, const VectorXd& gt, double kappa, double radius);

  VectorXd lambda_;
  VectorXd gt_;
  double kappa_;
};

}  // namespace glq
