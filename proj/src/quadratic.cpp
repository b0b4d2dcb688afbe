#include "glq/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "glq/errors.hpp"

namespace glq {

QuadraticFunction::QuadraticFunction(MatrixXd Q, VectorXd b, double c, const Tolerances& tol)
    : Q_(std::move(Q)), b_(std::move(b)), c_(c) {
  if (Q_.rows() != Q_.cols() || Q_.rows() != b_.size()) {
    throw DimensionMismatch("quadratic: Q must be n x n and b of length n");
  }
  if (!Q_.allFinite() || !b_.allFinite() || !std::isfinite(c_)) {
    throw std::invalid_argument("quadratic: non-finite coefficients");
  }
  if (n() == 0) return;
  if ((Q_ - Q_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("quadratic: Q is not symmetric");
  }
  Q_ = 0.5 * (Q_ + Q_.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(Q_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol.psd_tol) {
    throw std::invalid_argument("quadratic: Q is not positive semidefinite");
  }
}

double QuadraticFunction::operator()(const VectorXd& x) const {
  if (x.size() != n()) throw DimensionMismatch("quadratic: argument dimension");
  return 0.5 * x.dot(Q_ * x) + b_.dot(x) + c_;
}

VectorXd QuadraticFunction::gradient(const VectorXd& x) const {
  if (x.size() != n()) throw DimensionMismatch("quadratic: argument dimension");
  return Q_ * x + b_;
}

double QuadraticFunction::lipschitz() const {
  if (n() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(Q_, Eigen::EigenvaluesOnly);
  return std::max(0.0, es.eigenvalues()(n() - 1));
}

double quadratic_discrepancy(const QuadraticFunction& f, const QuadraticFunction& g) {
  if (f.n() != g.n()) throw DimensionMismatch("quadratic_discrepancy: dimension");
  if (f.n() == 0) return std::abs(f.c() - g.c()) / std::max(1.0, std::abs(f.c()));
  const double dQ = (f.Q() - g.Q()).cwiseAbs().maxCoeff() /
                    std::max(1.0, f.Q().cwiseAbs().maxCoeff());
  const double db = (f.b() - g.b()).cwiseAbs().maxCoeff() /
                    std::max(1.0, f.b().cwiseAbs().maxCoeff());
  const double dc = std::abs(f.c() - g.c()) / std::max(1.0, std::abs(f.c()));
  return std::max({dQ, db, dc});
}

}  // namespace glq
