#include "glq/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glq/errors.hpp"

namespace glq {

void Tolerances::validate() const {
  if (!(rank_rel_tol > 0) || !(psd_tol > 0) || !(value_tol > 0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

Subspace::Subspace(Index ambient_dim) : basis_(ambient_dim, 0) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
}

Subspace Subspace::from_orthonormal(MatrixXd basis) {
  const Index k = basis.cols();
  if (k > basis.rows()) throw std::invalid_argument("more basis vectors than ambient dimension");
  if (k > 0) {
    const double defect =
        (basis.transpose() * basis - MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) throw std::invalid_argument("basis columns are not orthonormal");
  }
  return Subspace(std::move(basis), 0);
}

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(MatrixXd::Identity(ambient_dim, ambient_dim), 0);
}

MatrixXd Subspace::projector() const { return basis_ * basis_.transpose(); }

double Subspace::residual(const VectorXd& x) const {
  if (x.size() != ambient_dim()) throw DimensionMismatch("vector does not match subspace");
  if (dim() == 0) return x.norm();
  return (x - basis_ * (basis_.transpose() * x)).norm();
}

Subspace column_space_abs(const MatrixXd& M, double cutoff) {
  const Index d = M.rows();
  if (M.cols() == 0 || d == 0) return Subspace(d);
  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff && sv(rank) > 0.0) ++rank;
  if (rank == 0) return Subspace(d);
  return Subspace::from_orthonormal(svd.matrixU().leftCols(rank));
}

Subspace column_space(const MatrixXd& M, const Tolerances& tol) {
  if (M.cols() == 0 || M.rows() == 0) return Subspace(M.rows());
  Eigen::JacobiSVD<MatrixXd> svd(M);
  const double sigma_max = svd.singularValues()(0);
  return column_space_abs(M, tol.rank_rel_tol * sigma_max);
}

Subspace span(std::span<const VectorXd> vectors, Index ambient_dim, const Tolerances& tol) {
  MatrixXd M(ambient_dim, static_cast<Index>(vectors.size()));
  for (Index j = 0; j < M.cols(); ++j) {
    if (vectors[j].size() != ambient_dim) throw DimensionMismatch("span: vector dimension mismatch");
    M.col(j) = vectors[j];
  }
  return column_space(M, tol);
}

Subspace complement(const Subspace& S) {
  const Index d = S.ambient_dim();
  const Index k = S.dim();
  if (k == 0) return Subspace::full(d);
  if (k == d) return Subspace(d);
  Eigen::JacobiSVD<MatrixXd> svd(S.basis(), Eigen::ComputeFullU);
  return Subspace::from_orthonormal(svd.matrixU().rightCols(d - k));
}

Subspace sum(const Subspace& S1, const Subspace& S2, const Tolerances& tol) {
  if (S1.ambient_dim() != S2.ambient_dim()) throw DimensionMismatch("sum: ambient dimension mismatch");
  MatrixXd M(S1.ambient_dim(), S1.dim() + S2.dim());
  M << S1.basis(), S2.basis();
  return column_space(M, tol);
}

Subspace intersect(const Subspace& S1, const Subspace& S2, const Tolerances& tol) {
  if (S1.ambient_dim() != S2.ambient_dim()) {
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  }
  return complement(sum(complement(S1), complement(S2), tol));
}

VectorXd project(const Subspace& S, const VectorXd& x) {
  if (x.size() != S.ambient_dim()) throw DimensionMismatch("project: dimension mismatch");
  if (S.dim() == 0) return VectorXd::Zero(x.size());
  return S.basis() * (S.basis().transpose() * x);
}

namespace {

double max_residual(const Subspace& from, const Subspace& onto) {
  if (from.dim() == 0) return 0.0;
  const MatrixXd R = onto.dim() == 0
                         ? from.basis()
                         : MatrixXd(from.basis() - onto.basis() * (onto.basis().transpose() * from.basis()));
  return R.colwise().norm().maxCoeff();
}

}  // namespace

double subspace_gap(const Subspace& S1, const Subspace& S2) {
  if (S1.ambient_dim() != S2.ambient_dim()) throw DimensionMismatch("gap: ambient dimension mismatch");
  if (S1.dim() != S2.dim()) return std::numeric_limits<double>::infinity();
  return std::max(max_residual(S1, S2), max_residual(S2, S1));
}

bool same_subspace(const Subspace& S1, const Subspace& S2, double tol) {
  return subspace_gap(S1, S2) <= tol;
}

bool is_contained(const Subspace& inner, const Subspace& outer, double tol) {
  if (inner.ambient_dim() != outer.ambient_dim()) {
    throw DimensionMismatch("containment: ambient dimension mismatch");
  }
  return max_residual(inner, outer) <= tol;
}

MatrixXd pinv_abs(const MatrixXd& M, double cutoff) {
  if (M.size() == 0) return MatrixXd::Zero(M.cols(), M.rows());
  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  VectorXd inv = VectorXd::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

MatrixXd pinv(const MatrixXd& M, const Tolerances& tol) {
  if (M.size() == 0) return MatrixXd::Zero(M.cols(), M.rows());
  Eigen::JacobiSVD<MatrixXd> svd(M);
  return pinv_abs(M, tol.rank_rel_tol * svd.singularValues()(0));
}

}  // namespace glq
