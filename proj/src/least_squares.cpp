#include "glq/least_squares.hpp"

#include "glq/errors.hpp"

namespace glq {

namespace {

void check(const LeastSquaresProblem& p) {
  if (p.M.rows() != p.b.size()) throw DimensionMismatch("least squares: M has m rows, b must have m entries");
}

}  // namespace

GlqFunction lstsq_objective(const LeastSquaresProblem& p) {
  check(p);
  const MatrixXd MtM = p.M.transpose() * p.M;
  return GlqFunction(from_matrix(0.5 * (MtM + MtM.transpose())), VectorXd::Zero(p.M.cols()),
                     -p.M.transpose() * p.b, 0.5 * p.b.squaredNorm());
}

GlqFunction lstsq_conjugate(const LeastSquaresProblem& p) { return conjugate(lstsq_objective(p)); }

Subspace lstsq_domain(const LeastSquaresProblem& p) {
  check(p);
  return column_space(p.M.transpose());
}

VectorXd lstsq_min_norm_solution(const LeastSquaresProblem& p) {
  check(p);
  return pinv(p.M) * p.b;
}

}  // namespace glq
