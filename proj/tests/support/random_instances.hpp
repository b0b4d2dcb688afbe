#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "glq/glq_function.hpp"

namespace glq::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  VectorXd vector(Index n, double scale = 1.0) {
    VectorXd v(n);
    for (Index i = 0; i < n; ++i) v(i) = scale * normal();
    return v;
  }
  MatrixXd matrix(Index m, Index n) {
    MatrixXd M(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) M(i, j) = normal();
    return M;
  }
  /// n x k with orthonormal columns.
  MatrixXd orthonormal(Index n, Index k) {
    if (k == 0) return MatrixXd(n, 0);
    Eigen::HouseholderQR<MatrixXd> qr(matrix(n, k));
    return qr.householderQ() * MatrixXd::Identity(n, k);
  }
  Subspace subspace(Index n, Index k) { return Subspace::from_orthonormal(orthonormal(n, k)); }
  /// Span of k distinct coordinate axes.
  Subspace axis_subspace(Index n, Index k) {
    std::vector<Index> idx(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), gen_);
    std::sort(idx.begin(), idx.begin() + k);
    MatrixXd B = MatrixXd::Zero(n, k);
    for (Index j = 0; j < k; ++j) B(idx[static_cast<std::size_t>(j)], j) = 1.0;
    return Subspace::from_orthonormal(B);
  }
  /// Symmetric PSD with the given rank and eigenvalues in [lo, hi].
  MatrixXd psd(Index n, Index rank, double lo = 0.2, double hi = 3.0) {
    const MatrixXd U = orthonormal(n, rank);
    VectorXd d(rank);
    for (Index i = 0; i < rank; ++i) d(i) = uniform(lo, hi);
    const MatrixXd S = U * d.asDiagonal() * U.transpose();
    return 0.5 * (S + S.transpose());
  }

  /// Maximally monotone symmetric relation with dom = L and selection
  /// P_L S P_L for a PSD S of random rank.
  LinearRelation relation_on(const Subspace& L, double lo = 0.2, double hi = 3.0) {
    const Index n = L.ambient_dim();
    const Index k = L.dim();
    const Subspace Lp = complement(L);
    MatrixXd S = MatrixXd::Zero(k, k);
    if (k > 0) {
      const Index rank = integer(0, static_cast<int>(k));
      S = psd(k, rank, lo, hi);
    }
    MatrixXd G = MatrixXd::Zero(2 * n, n);
    G.block(0, 0, n, k) = L.basis();
    G.block(n, 0, n, k) = L.basis() * S;
    G.block(n, k, n, n - k) = Lp.basis();
    return LinearRelation(column_space(G));
  }

  /// Mixture of full matrices, pure normal cones and partial-domain relations.
  LinearRelation relation(Index n, bool axis_aligned = false) {
    const int kind = integer(0, 2);
    if (kind == 0) return from_matrix(psd(n, integer(0, static_cast<int>(n))));
    const Index k = integer(0, static_cast<int>(n));
    const Subspace L = axis_aligned ? axis_subspace(n, k) : subspace(n, k);
    if (kind == 1) return normal_cone_of(L);
    return relation_on(L);
  }

  GlqFunction glq(Index n, bool axis_aligned = false, double scale = 1.0) {
    return GlqFunction(relation(n, axis_aligned), vector(n, scale), vector(n, scale),
                       scale * normal());
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline double rel_err(const VectorXd& got, const VectorXd& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace glq::testing
