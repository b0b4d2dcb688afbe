#include "glq/linear_relation.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "glq/errors.hpp"

namespace glq {

namespace {

// Singular values of a graph block lie in [0,1], so an absolute cutoff works.
constexpr double kBlockCutoff = 1e-10;

MatrixXd stack(const MatrixXd& top, const MatrixXd& bottom) {
  MatrixXd G(top.rows() + bottom.rows(), top.cols());
  G << top, bottom;
  return G;
}

}  // namespace

AffineSet AffineSet::empty_set(Index n) {
  AffineSet s;
  s.n = n;
  s.empty = true;
  s.directions = Subspace(n);
  return s;
}

AffineSet AffineSet::make(VectorXd point, Subspace directions) {
  if (point.size() != directions.ambient_dim()) throw DimensionMismatch("affine set dimensions");
  AffineSet s;
  s.n = point.size();
  s.empty = false;
  s.point = std::move(point);
  s.directions = std::move(directions);
  return s;
}

double AffineSet::distance(const VectorXd& x) const {
  if (x.size() != n) throw DimensionMismatch("affine set membership");
  if (empty) return std::numeric_limits<double>::infinity();
  return directions.residual(x - point);
}

bool AffineSet::contains(const VectorXd& x, double tol) const { return distance(x) <= tol; }

LinearRelation::LinearRelation(Subspace graph)
    : n_(graph.ambient_dim() / 2),
      graph_(std::move(graph)),
      dom_(n_),
      ran_(n_),
      mul_(n_) {
  if (graph_.ambient_dim() % 2 != 0) throw DimensionMismatch("graph must live in R^{2n}");
  const MatrixXd X = input_block();
  const MatrixXd Y = output_block();
  dom_ = column_space_abs(X, kBlockCutoff);
  ran_ = column_space_abs(Y, kBlockCutoff);

  MatrixXd out_axis = MatrixXd::Zero(2 * n_, n_);
  out_axis.bottomRows(n_).setIdentity();
  const Subspace zero_in = intersect(graph_, Subspace::from_orthonormal(out_axis));
  mul_ = column_space_abs(zero_in.basis().bottomRows(n_), 0.5);

  MatrixXd K = Y * pinv_abs(X, kBlockCutoff);
  if (mul_.dim() > 0) K -= mul_.basis() * (mul_.basis().transpose() * K);
  sel_ = std::move(K);
}

bool LinearRelation::in_domain(const VectorXd& x, const Tolerances& tol) const {
  return dom_.residual(x) <= tol.value_tol * std::max(1.0, x.norm());
}

AffineSet LinearRelation::apply(const VectorXd& x, const Tolerances& tol) const {
  if (x.size() != n_) throw DimensionMismatch("apply: vector dimension mismatch");
  if (!in_domain(x, tol)) return AffineSet::empty_set(n_);
  return AffineSet::make(sel_ * project(dom_, x), mul_);
}

LinearRelation from_matrix(const MatrixXd& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("from_matrix: matrix must be square");
  const Index n = M.rows();
  return LinearRelation(column_space(stack(MatrixXd::Identity(n, n), M)));
}

LinearRelation normal_cone_of(const Subspace& L) {
  const Index n = L.ambient_dim();
  const Subspace Lp = complement(L);
  MatrixXd G = MatrixXd::Zero(2 * n, n);
  G.block(0, 0, n, L.dim()) = L.basis();
  G.block(n, L.dim(), n, Lp.dim()) = Lp.basis();
  return LinearRelation(Subspace::from_orthonormal(G));
}

LinearRelation scaled_identity(Index n, double lambda) {
  return from_matrix(lambda * MatrixXd::Identity(n, n));
}

LinearRelation from_graph_vectors(const MatrixXd& columns, const Tolerances& tol) {
  if (columns.rows() % 2 != 0) throw DimensionMismatch("graph vectors must have even length");
  return LinearRelation(column_space(columns, tol));
}

LinearRelation inverse(const LinearRelation& A) {
  return LinearRelation(Subspace::from_orthonormal(stack(A.output_block(), A.input_block())));
}

LinearRelation adjoint(const LinearRelation& A) {
  const Index n = A.n();
  const Subspace perp = complement(A.graph());
  const MatrixXd& B = perp.basis();
  return LinearRelation(
      Subspace::from_orthonormal(stack(-B.bottomRows(n), B.topRows(n))));
}

bool is_monotone(const LinearRelation& A, const Tolerances& tol) {
  if (A.graph().dim() == 0) return true;
  const MatrixXd XtY = A.input_block().transpose() * A.output_block();
  const MatrixXd S = 0.5 * (XtY + XtY.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(S, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol.psd_tol) return false;
  const Subspace& A0 = A.multivalued_part();
  if (A0.dim() == 0 || A.dom().dim() == 0) return true;
  const double cross = (A0.basis().transpose() * A.dom().basis()).cwiseAbs().maxCoeff();
  return cross <= std::sqrt(tol.psd_tol);
}

bool is_symmetric(const LinearRelation& A, const Tolerances& tol) {
  if (A.graph().dim() == 0) return true;
  const MatrixXd XtY = A.input_block().transpose() * A.output_block();
  return (XtY - XtY.transpose()).cwiseAbs().maxCoeff() <= tol.psd_tol;
}

bool is_maximal_monotone(const LinearRelation& A, const Tolerances& tol) {
  if (A.graph().dim() != A.n() || !is_monotone(A, tol)) return false;
  const MatrixXd XpY = A.input_block() + A.output_block();
  // For monotone graphs the singular values of X+Y are at least 1 - O(tol).
  return column_space_abs(XpY, 0.5).dim() == A.n();
}

LinearRelation add(const LinearRelation& A1, const LinearRelation& A2, const Tolerances& tol) {
  if (A1.n() != A2.n()) throw DimensionMismatch("add: relations on different spaces");
  const Index n = A1.n();
  const Index k1 = A1.graph().dim();
  const Index k2 = A2.graph().dim();

  // Lift to R^{3n} with coordinates (x, y1, y2).
  MatrixXd L1 = MatrixXd::Zero(3 * n, k1 + n);
  L1.block(0, 0, n, k1) = A1.input_block();
  L1.block(n, 0, n, k1) = A1.output_block();
  L1.block(2 * n, k1, n, n).setIdentity();
  MatrixXd L2 = MatrixXd::Zero(3 * n, k2 + n);
  L2.block(0, 0, n, k2) = A2.input_block();
  L2.block(2 * n, 0, n, k2) = A2.output_block();
  L2.block(n, k2, n, n).setIdentity();

  const Subspace W = intersect(Subspace::from_orthonormal(L1), Subspace::from_orthonormal(L2), tol);
  if (W.dim() == 0) return LinearRelation(Subspace(2 * n));
  const MatrixXd& B = W.basis();
  const MatrixXd img = stack(B.topRows(n), B.middleRows(n, n) + B.bottomRows(n));
  return LinearRelation(column_space(img, tol));
}

LinearRelation scale(const LinearRelation& A, double lambda, const Tolerances& tol) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("scale: non-finite factor");
  if (A.graph().dim() == 0) return A;
  return LinearRelation(column_space(stack(A.input_block(), lambda * A.output_block()), tol));
}

LinearRelation subtract(const LinearRelation& A1, const LinearRelation& A2, const Tolerances& tol) {
  return add(A1, scale(A2, -1.0, tol), tol);
}

LinearRelation symmetric_part(const LinearRelation& A, const Tolerances& tol) {
  return scale(add(A, adjoint(A), tol), 0.5, tol);
}

MatrixXd resolvent(const LinearRelation& A, const Tolerances& tol) {
  if (!is_maximal_monotone(A, tol)) {
    throw PreconditionViolation("resolvent: relation is not maximally monotone");
  }
  const MatrixXd X = A.input_block();
  const MatrixXd XpY = X + A.output_block();
  // J (X+Y) = X, and X+Y is square and well conditioned here.
  return XpY.transpose().partialPivLu().solve(X.transpose()).transpose();
}

MatrixXd moore_penrose(const LinearRelation& A, const Tolerances& tol) {
  if (!is_maximal_monotone(A, tol)) {
    throw PreconditionViolation("moore_penrose: relation is not maximally monotone");
  }
  // For symmetric maximal A the minimum-norm selection of A^{-1} is
  // P_ran A^{-1} P_ran. A relative cutoff on sel(A) would blow up noise when
  // the selection is numerically zero.
  return inverse(A).selection();
}

bool same_relation(const LinearRelation& A, const LinearRelation& B, double tol) {
  if (A.n() != B.n()) return false;
  return same_subspace(A.graph(), B.graph(), tol);
}

}  // namespace glq
