#pragma once

#include "glq/glq_function.hpp"

namespace glq {

/// l(x) = 1/2 ||Mx - b||^2 with M of size m x n.
struct LeastSquaresProblem {
  MatrixXd M;
  VectorXd b;
};

/// l as a GLQ function: (M^T M, 0, -M^T b, ||b||^2/2).
GlqFunction lstsq_objective(const LeastSquaresProblem& p);
GlqFunction lstsq_conjugate(const LeastSquaresProblem& p);
/// dom l* = ran M^T.
Subspace lstsq_domain(const LeastSquaresProblem& p);
VectorXd lstsq_min_norm_solution(const LeastSquaresProblem& p);

}  // namespace glq
