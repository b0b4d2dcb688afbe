#include <doctest.h>

#include <vector>

#include "glq/errors.hpp"
#include "glq/subspace.hpp"
#include "support/random_instances.hpp"

using namespace glq;
using glq::testing::Rng;

namespace {

double orthonormality_defect(const Subspace& S) {
  if (S.dim() == 0) return 0.0;
  return (S.basis().transpose() * S.basis() - MatrixXd::Identity(S.dim(), S.dim())).cwiseAbs().maxCoeff();
}

Index stacked_rank(const MatrixXd& M) {
  if (M.cols() == 0) return 0;
  Eigen::FullPivLU<MatrixXd> lu(M);
  lu.setThreshold(1e-9);
  return lu.rank();
}

}  // namespace

TEST_CASE("span of collinear vectors is a line") {
  std::vector<VectorXd> v{VectorXd::Unit(2, 0), 2.0 * VectorXd::Unit(2, 0)};
  const Subspace S = span(v, 2);
  CHECK(S.dim() == 1);
  CHECK(std::abs(std::abs(S.basis()(0, 0)) - 1.0) < 1e-14);
}

TEST_CASE("empty span is the zero subspace") {
  const Subspace S = span(std::vector<VectorXd>{}, 2);
  CHECK(S.dim() == 0);
  CHECK(S.ambient_dim() == 2);
}

TEST_CASE("a single tiny vector still spans a line") {
  VectorXd v(2);
  v << 1.0, 1e-13;
  const Subspace S = span(std::vector<VectorXd>{v}, 2);
  CHECK(S.dim() == 1);
}

TEST_CASE("span rejects mixed dimensions") {
  std::vector<VectorXd> v{VectorXd::Ones(2), VectorXd::Ones(3)};
  CHECK_THROWS_AS(span(v, 2), DimensionMismatch);
}

TEST_CASE("complement of coordinate axes and of the zero subspace") {
  const Subspace x = span(std::vector<VectorXd>{VectorXd::Unit(2, 0)}, 2);
  const Subspace y = complement(x);
  CHECK(y.dim() == 1);
  CHECK(std::abs(std::abs(y.basis()(1, 0)) - 1.0) < 1e-14);
  CHECK(complement(Subspace(3)).dim() == 3);
  CHECK(complement(Subspace::full(3)).dim() == 0);
}

TEST_CASE("complement is an involution and stays orthonormal") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Index d = rng.integer(1, 8);
    const Index k = rng.integer(0, static_cast<int>(d));
    const Subspace S = rng.subspace(d, k);
    const Subspace C = complement(S);
    CHECK(S.dim() + C.dim() == d);
    CHECK(orthonormality_defect(C) <= 1e-10);
    if (C.dim() > 0 && S.dim() > 0) CHECK((S.basis().transpose() * C.basis()).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(same_subspace(complement(C), S, 1e-9));
  }
}

TEST_CASE("sum and intersection of the axes") {
  const Subspace x = span(std::vector<VectorXd>{VectorXd::Unit(2, 0)}, 2);
  const Subspace y = span(std::vector<VectorXd>{VectorXd::Unit(2, 1)}, 2);
  CHECK(sum(x, y).dim() == 2);
  CHECK(intersect(x, y).dim() == 0);
  CHECK_THROWS_AS(sum(x, Subspace(3)), DimensionMismatch);
}

TEST_CASE("Grassmann dimension identity on random pairs") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Index d = 5;
    // Build pairs with a planted common part so intersections are nontrivial.
    const Index c = rng.integer(0, 2);
    const MatrixXd common = rng.matrix(d, c);
    const Index k1 = rng.integer(0, 2), k2 = rng.integer(0, 2);
    MatrixXd B1(d, c + k1), B2(d, c + k2);
    B1 << common, rng.matrix(d, k1);
    B2 << common, rng.matrix(d, k2);
    const Subspace S1 = column_space(B1), S2 = column_space(B2);
    const Subspace Ssum = sum(S1, S2), Sint = intersect(S1, S2);
    MatrixXd stacked(d, S1.dim() + S2.dim());
    stacked << S1.basis(), S2.basis();
    CHECK(Ssum.dim() == stacked_rank(stacked));
    CHECK(S1.dim() + S2.dim() == Ssum.dim() + Sint.dim());
    CHECK(is_contained(Sint, S1, 1e-9));
    CHECK(is_contained(Sint, S2, 1e-9));
  }
}

TEST_CASE("projection examples and idempotence") {
  const Subspace x = span(std::vector<VectorXd>{VectorXd::Unit(2, 0)}, 2);
  VectorXd p(2);
  p << 3, 4;
  const VectorXd px = project(x, p);
  CHECK(px(0) == doctest::Approx(3.0));
  CHECK(std::abs(px(1)) < 1e-15);
  CHECK((project(Subspace::full(2), p) - p).norm() < 1e-14);

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Subspace S = rng.subspace(6, rng.integer(0, 6));
    const VectorXd v = rng.vector(6);
    const VectorXd Pv = project(S, v);
    CHECK((project(S, Pv) - Pv).norm() <= 1e-12);
    // Residual is orthogonal to S, so P_S v is the nearest point.
    if (S.dim() > 0) CHECK((S.basis().transpose() * (v - Pv)).norm() <= 1e-12);
  }
}

TEST_CASE("pinv examples") {
  MatrixXd D = MatrixXd::Zero(2, 2);
  D(0, 0) = 2.0;
  const MatrixXd Dp = pinv(D);
  CHECK(Dp(0, 0) == doctest::Approx(0.5));
  CHECK(std::abs(Dp(1, 1)) < 1e-15);
  CHECK((pinv(MatrixXd::Identity(3, 3)) - MatrixXd::Identity(3, 3)).norm() < 1e-14);

  Rng rng(14);
  const MatrixXd U = rng.orthonormal(5, 2);
  const MatrixXd P = U * U.transpose();
  CHECK((pinv(P) - P).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("pinv satisfies the Penrose equations") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const Index m = rng.integer(1, 6), n = rng.integer(1, 6);
    const Index k = rng.integer(0, static_cast<int>(std::min(m, n)));
    const MatrixXd M = t % 2 == 0 ? rng.matrix(m, n) : MatrixXd(rng.matrix(m, k) * rng.matrix(k, n));
    const MatrixXd X = pinv(M);
    const double scale = std::max(1.0, M.norm() * X.norm());
    CHECK((M * X * M - M).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    CHECK((X * M * X - X).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    CHECK(((M * X).transpose() - M * X).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(((X * M).transpose() - X * M).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("subspace equality ignores the choice of basis") {
  Rng rng(16);
  const Subspace S = rng.subspace(4, 2);
  const MatrixXd R = rng.orthonormal(2, 2);
  const Subspace T = Subspace::from_orthonormal(S.basis() * R);
  CHECK(same_subspace(S, T, 1e-12));
  CHECK(subspace_gap(S, rng.subspace(4, 3)) == std::numeric_limits<double>::infinity());
}

TEST_CASE("from_orthonormal rejects non-orthonormal input and tolerances validate") {
  CHECK_THROWS(Subspace::from_orthonormal(MatrixXd::Ones(2, 1)));
  Tolerances tol;
  CHECK_NOTHROW(tol.validate());
  tol.psd_tol = 0.0;
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
}
