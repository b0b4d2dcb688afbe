#pragma once

#include "glq/subspace.hpp"

namespace glq {

/// x -> 1/2 <x,Qx> + <b,x> + c with Q symmetric positive semidefinite.
class QuadraticFunction {
 public:
  /// Throws std::invalid_argument if Q is not symmetric (1e-10) or has an
  /// eigenvalue below -psd_tol.
  QuadraticFunction(MatrixXd Q, VectorXd b, double c, const Tolerances& tol = {});

  Index n() const { return b_.size(); }
  const MatrixXd& Q() const { return Q_; }
  const VectorXd& b() const { return b_; }
  double c() const { return c_; }

  double operator()(const VectorXd& x) const;
  VectorXd gradient(const VectorXd& x) const;
  /// Largest Hessian eigenvalue, i.e. the Lipschitz constant of the gradient.
  double lipschitz() const;

 private:
  MatrixXd Q_;
  VectorXd b_;
  double c_;
};

/// max(|dQ|, |db|, |dc|), each scaled by max(1, magnitude of the first argument).
double quadratic_discrepancy(const QuadraticFunction& f, const QuadraticFunction& g);

}  // namespace glq
