#pragma once

#include "glq/subspace.hpp"

namespace glq {

/// point + directions, or the empty set.
struct AffineSet {
  Index n = 0;
  bool empty = true;
  VectorXd point;
  Subspace directions{0};

  static AffineSet empty_set(Index n);
  static AffineSet make(VectorXd point, Subspace directions);

  bool contains(const VectorXd& x, double tol) const;
  /// Distance from x to the set (+inf when empty).
  double distance(const VectorXd& x) const;
};

/**
 * A linear relation on R^n, stored as its graph in R^{2n}.
 *
 * Rows 0..n-1 of the graph basis are the input block, rows n..2n-1 the
 * output block. dom, ran, A0 and the minimum-norm selection are computed
 * once at construction.
 */
class LinearRelation {
 public:
  explicit LinearRelation(Subspace graph);

  Index n() const { return n_; }
  const Subspace& graph() const { return graph_; }
  auto input_block() const { return graph_.basis().topRows(n_); }
  auto output_block() const { return graph_.basis().bottomRows(n_); }

  const Subspace& dom() const { return dom_; }
  const Subspace& ran() const { return ran_; }
  /// A0 = {y : (0,y) in graph}.
  const Subspace& multivalued_part() const { return mul_; }
  /// Matrix K with Kx the minimum-norm element of Ax for x in dom.
  const MatrixXd& selection() const { return sel_; }

  bool in_domain(const VectorXd& x, const Tolerances& tol = {}) const;
  AffineSet apply(const VectorXd& x, const Tolerances& tol = {}) const;

 private:
  Index n_;
  Subspace graph_;
  Subspace dom_;
  Subspace ran_;
  Subspace mul_;
  MatrixXd sel_;
};

LinearRelation from_matrix(const MatrixXd& M);
/// gra N_L = L x L^perp.
LinearRelation normal_cone_of(const Subspace& L);
LinearRelation scaled_identity(Index n, double lambda);
/// Relation with the given graph spanning vectors (columns in R^{2n}).
LinearRelation from_graph_vectors(const MatrixXd& columns, const Tolerances& tol = {});

LinearRelation inverse(const LinearRelation& A);
LinearRelation adjoint(const LinearRelation& A);

bool is_monotone(const LinearRelation& A, const Tolerances& tol = {});
bool is_symmetric(const LinearRelation& A, const Tolerances& tol = {});
bool is_maximal_monotone(const LinearRelation& A, const Tolerances& tol = {});

LinearRelation add(const LinearRelation& A1, const LinearRelation& A2,
                   const Tolerances& tol = {});
/// Multiplies the output block by lambda (any real).
LinearRelation scale(const LinearRelation& A, double lambda, const Tolerances& tol = {});
LinearRelation subtract(const LinearRelation& A1, const LinearRelation& A2,
                        const Tolerances& tol = {});
LinearRelation symmetric_part(const LinearRelation& A, const Tolerances& tol = {});

/// (Id + A)^{-1} as a matrix. Throws PreconditionViolation unless A is
/// maximally monotone.
MatrixXd resolvent(const LinearRelation& A, const Tolerances& tol = {});
/// A^dagger = P_ran A^{-1} P_ran. Throws unless A is maximally monotone.
MatrixXd moore_penrose(const LinearRelation& A, const Tolerances& tol = {});

bool same_relation(const LinearRelation& A, const LinearRelation& B, double tol);

}  // namespace glq
