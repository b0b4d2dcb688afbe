#pragma once

// Brute-force reference computations on black-box callables. Nothing here
// depends on the closed-form library.

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace glq::oracle {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Extended-real valued function; +inf (HUGE_VAL) marks points outside the domain.
using ScalarFn = std::function<double(const VectorXd&)>;
using VectorFn = std::function<VectorXd(const VectorXd&)>;

struct GridSpec {
  VectorXd center;
  double half_width = 5.0;
  int points_per_axis = 51;
  /// Extra refinement passes around the current optimiser (0 = plain grid).
  int zoom_levels = 0;

  /// Throws std::invalid_argument unless points_per_axis is odd and >= 3 and half_width > 0.
  void validate() const;
  /// half_width 5 with 2001 / 201 / 51 points per axis for n = 1 / 2 / 3.
  static GridSpec defaults(const VectorXd& center);
};

struct BruteResult {
  double value = 0.0;
  VectorXd argopt;
  /// Coarse-grid optimiser sat on the hull of the grid.
  bool boundary_hit = false;
  /// Supremum appears to diverge (conjugates only).
  bool unbounded = false;
};

/// min over the grid of f(y) + r/2 ||y - x||^2.
BruteResult brute_envelope(const ScalarFn& f, double r, const VectorXd& x, const GridSpec& grid);
/// max over the grid of <y,x> - f(x).
BruteResult brute_conjugate(const ScalarFn& f, const VectorXd& y, const GridSpec& grid);

/// min over the grid of f1(y) + f2(x - y).
BruteResult brute_inf_convolution(const ScalarFn& f1, const ScalarFn& f2, const VectorXd& x,
                                  const GridSpec& grid);

/// Central differences; throws std::domain_error on non-finite samples.
VectorXd fd_gradient(const ScalarFn& f, const VectorXd& x, double h = 1e-5);

/// sum_i <x_i - T x_i, T x_i - T x_{i+1}> over the closed cycle.
double cyclic_monotonicity_sum(const VectorFn& T, const std::vector<VectorXd>& points);
/// cyclic_monotonicity_sum >= -1e-10. Throws on an empty list.
bool cyclic_monotonicity_check(const VectorFn& T, const std::vector<VectorXd>& points);

/// max of |h| over grid points of [-radius, radius]^n that lie in the ball of that radius.
double grid_ball_sup(const ScalarFn& h, Index n, double radius, int points_per_axis);

}  // namespace glq::oracle
