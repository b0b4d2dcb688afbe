#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace glq {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Numerical thresholds shared by every rank, sign and membership decision.
struct Tolerances {
  /// Singular values below rank_rel_tol * sigma_max are treated as zero.
  double rank_rel_tol = 1e-10;
  /// Eigenvalues above -psd_tol count as nonnegative.
  double psd_tol = 1e-9;
  /// Residual threshold for set membership and value comparisons.
  double value_tol = 1e-9;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/**
 * A linear subspace of R^d stored as an orthonormal basis (d x k).
 *
 * The zero subspace has k = 0; it is never represented by a zero column.
 */
class Subspace {
 public:
  /// The zero subspace of R^ambient_dim.
  explicit Subspace(Index ambient_dim);

  /// Wraps a basis that already has orthonormal columns (checked to 1e-10).
  static Subspace from_orthonormal(MatrixXd basis);
  static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const MatrixXd& basis() const { return basis_; }

  /// Orthogonal projector basis * basis^T.
  MatrixXd projector() const;
  /// Distance from x to the subspace.
  double residual(const VectorXd& x) const;

 private:
  explicit Subspace(MatrixXd basis, int) : basis_(std::move(basis)) {}
  MatrixXd basis_;
};

/// Span of the given vectors in R^ambient_dim.
Subspace span(std::span<const VectorXd> vectors, Index ambient_dim,
              const Tolerances& tol = {});
/// Column space of M, rank decided relative to its largest singular value.
Subspace column_space(const MatrixXd& M, const Tolerances& tol = {});
/// Column space of M with an absolute singular-value cutoff.
Subspace column_space_abs(const MatrixXd& M, double cutoff);

Subspace complement(const Subspace& S);
Subspace sum(const Subspace& S1, const Subspace& S2, const Tolerances& tol = {});
Subspace intersect(const Subspace& S1, const Subspace& S2, const Tolerances& tol = {});
VectorXd project(const Subspace& S, const VectorXd& x);

/// max over both directions of the largest residual of one basis against the
/// other subspace; +inf when dimensions differ.
double subspace_gap(const Subspace& S1, const Subspace& S2);
bool same_subspace(const Subspace& S1, const Subspace& S2, double tol);
/// True when every basis vector of inner lies in outer within tol.
bool is_contained(const Subspace& inner, const Subspace& outer, double tol);

/// Moore-Penrose pseudoinverse via SVD, cutoff rank_rel_tol * sigma_max.
MatrixXd pinv(const MatrixXd& M, const Tolerances& tol = {});
/// Pseudoinverse with an absolute singular-value cutoff.
MatrixXd pinv_abs(const MatrixXd& M, double cutoff);

}  // namespace glq
