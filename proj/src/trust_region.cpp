#include "glq/trust_region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "glq/errors.hpp"

namespace glq {

BallQuadratic::BallQuadratic(const MatrixXd& H, const VectorXd& g, double kappa)
    : kappa_(kappa) {
  if (H.rows() != H.cols() || H.rows() != g.size()) throw DimensionMismatch("BallQuadratic shapes");
  if (H.rows() == 0) {
    lambda_.resize(0);
    gt_.resize(0);
    return;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (H + H.transpose()));
  lambda_ = es.eigenvalues();
  gt_ = es.eigenvectors().transpose() * g;
}

// phi(mu) = kappa - 1/2 sum gt_i^2/(lambda_i+mu) - 1/2 mu radius^2 is concave on
// mu >= max(0,-lambda_min) and its maximum equals the constrained minimum.
double BallQuadratic::dual_min(const VectorXd& lambda, const VectorXd& gt, double kappa,
                               double radius) {
  const Index n = lambda.size();
  if (n == 0) return kappa;
  const double lam_min = lambda.minCoeff();
  const double mu_lo = std::max(0.0, -lam_min);
  const double r2 = radius * radius;

  auto slope = [&](double mu) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (gt(i) == 0.0) continue;
      const double d = lambda(i) + mu;
      if (d <= 0.0) return HUGE_VAL;
      s += gt(i) * gt(i) / (d * d);
    }
    return 0.5 * (s - r2);
  };
  auto phi = [&](double mu) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (gt(i) == 0.0) continue;
      s += gt(i) * gt(i) / (lambda(i) + mu);
    }
    return kappa - 0.5 * s - 0.5 * mu * r2;
  };

  if (slope(mu_lo) <= 0.0) return phi(mu_lo);
  double lo = mu_lo;
  double hi = mu_lo + gt.norm() / radius;
  while (slope(hi) > 0.0) hi = mu_lo + 2.0 * (hi - mu_lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (slope(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return phi(hi);
}

double BallQuadratic::min_on_ball(double radius) const {
  if (!(radius > 0)) throw std::invalid_argument("ball radius must be > 0");
  return dual_min(lambda_, gt_, kappa_, radius);
}

double BallQuadratic::max_on_ball(double radius) const {
  if (!(radius > 0)) throw std::invalid_argument("ball radius must be > 0");
  return -dual_min(-lambda_, -gt_, -kappa_, radius);
}

double BallQuadratic::sup_abs_on_ball(double radius) const {
  return std::max(max_on_ball(radius), -min_on_ball(radius));
}

}  // namespace glq
