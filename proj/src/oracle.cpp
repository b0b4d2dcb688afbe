#include "glq/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace glq::oracle {

void GridSpec::validate() const {
  if (points_per_axis < 3 || points_per_axis % 2 == 0) {
    throw std::invalid_argument("grid: points_per_axis must be odd and >= 3");
  }
  if (!(half_width > 0)) throw std::invalid_argument("grid: half_width must be > 0");
  if (zoom_levels < 0) throw std::invalid_argument("grid: zoom_levels must be >= 0");
  if (center.size() == 0) throw std::invalid_argument("grid: empty center");
}

GridSpec GridSpec::defaults(const VectorXd& center) {
  GridSpec g;
  g.center = center;
  g.half_width = 5.0;
  g.points_per_axis = center.size() == 1 ? 2001 : center.size() == 2 ? 201 : 51;
  return g;
}

namespace {

struct Scan {
  double best = HUGE_VAL;
  VectorXd arg;
  bool on_hull = false;
};

// Visits every node in lexicographic order and keeps the first strict
// minimiser of score, so the result does not depend on scheduling.
template <class Score>
Scan scan_grid(const VectorXd& center, double half_width, int m, Score&& score) {
  const Index n = center.size();
  const double step = 2.0 * half_width / (m - 1);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  VectorXd y(n);
  Scan s;
  s.arg = center;
  std::vector<int> best_idx = idx;
  while (true) {
    for (Index d = 0; d < n; ++d) y(d) = center(d) - half_width + step * idx[static_cast<std::size_t>(d)];
    const double v = score(y);
    if (v < s.best) {
      s.best = v;
      s.arg = y;
      best_idx = idx;
    }
    Index d = 0;
    while (d < n && ++idx[static_cast<std::size_t>(d)] == m) idx[static_cast<std::size_t>(d++)] = 0;
    if (d == n) break;
  }
  for (int i : best_idx) s.on_hull = s.on_hull || i == 0 || i == m - 1;
  return s;
}

template <class Score>
Scan zoomed_min(const GridSpec& grid, Score&& score, bool& coarse_hull) {
  VectorXd center = grid.center;
  double hw = grid.half_width;
  const int m = grid.points_per_axis;
  Scan s = scan_grid(center, hw, m, score);
  coarse_hull = s.on_hull;
  for (int level = 0; level < grid.zoom_levels && std::isfinite(s.best); ++level) {
    center = s.arg;
    if (!s.on_hull) hw = std::min(hw, 2.0 * (2.0 * hw / (m - 1)));
    // The old optimiser is the centre node, so the new scan never gets worse.
    s = scan_grid(center, hw, m, score);
  }
  return s;
}

}  // namespace

BruteResult brute_envelope(const ScalarFn& f, double r, const VectorXd& x, const GridSpec& grid) {
  grid.validate();
  if (x.size() != grid.center.size()) throw std::invalid_argument("brute_envelope: dimension mismatch");
  if (!(r > 0)) throw std::invalid_argument("brute_envelope: r must be > 0");
  auto score = [&](const VectorXd& y) {
    const double fy = f(y);
    if (!std::isfinite(fy)) return HUGE_VAL;
    return fy + 0.5 * r * (y - x).squaredNorm();
  };
  BruteResult out;
  const Scan s = zoomed_min(grid, score, out.boundary_hit);
  out.value = s.best;
  out.argopt = s.arg;
  return out;
}

BruteResult brute_conjugate(const ScalarFn& f, const VectorXd& y, const GridSpec& grid) {
  grid.validate();
  if (y.size() != grid.center.size()) throw std::invalid_argument("brute_conjugate: dimension mismatch");
  auto score = [&](const VectorXd& x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) return HUGE_VAL;
    return fx - y.dot(x);
  };
  BruteResult out;
  GridSpec plain = grid;
  plain.zoom_levels = 0;
  bool hull_small = false;
  const Scan small = zoomed_min(plain, score, hull_small);
  GridSpec wide = plain;
  wide.half_width *= 2.0;
  bool hull_wide = false;
  const Scan big = zoomed_min(wide, score, hull_wide);
  if (hull_small && hull_wide && -big.best > -small.best + 1e-12 * std::max(1.0, std::abs(small.best))) {
    out.unbounded = true;
    out.boundary_hit = true;
    out.value = HUGE_VAL;
    out.argopt = big.arg;
    return out;
  }
  const Scan s = zoomed_min(grid, score, out.boundary_hit);
  out.value = -s.best;
  out.argopt = s.arg;
  return out;
}

BruteResult brute_inf_convolution(const ScalarFn& f1, const ScalarFn& f2, const VectorXd& x,
                                  const GridSpec& grid) {
  grid.validate();
  if (x.size() != grid.center.size()) throw std::invalid_argument("brute_inf_convolution: dimension mismatch");
  auto score = [&](const VectorXd& y) {
    const double a = f1(y);
    if (!std::isfinite(a)) return HUGE_VAL;
    const double b = f2(x - y);
    if (!std::isfinite(b)) return HUGE_VAL;
    return a + b;
  };
  BruteResult out;
  const Scan s = zoomed_min(grid, score, out.boundary_hit);
  out.value = s.best;
  out.argopt = s.arg;
  return out;
}

VectorXd fd_gradient(const ScalarFn& f, const VectorXd& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("fd_gradient: step must be > 0");
  VectorXd g(x.size());
  VectorXd xp = x;
  for (Index i = 0; i < x.size(); ++i) {
    xp(i) = x(i) + h;
    const double fp = f(xp);
    xp(i) = x(i) - h;
    const double fm = f(xp);
    xp(i) = x(i);
    if (!std::isfinite(fp) || !std::isfinite(fm)) throw std::domain_error("fd_gradient: non-finite sample");
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

double cyclic_monotonicity_sum(const VectorFn& T, const std::vector<VectorXd>& points) {
  if (points.empty()) throw std::invalid_argument("cyclic monotonicity: empty point list");
  std::vector<VectorXd> t;
  t.reserve(points.size());
  for (const auto& p : points) t.push_back(T(p));
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t j = (i + 1) % points.size();
    sum += (points[i] - t[i]).dot(t[i] - t[j]);
  }
  return sum;
}

bool cyclic_monotonicity_check(const VectorFn& T, const std::vector<VectorXd>& points) {
  return cyclic_monotonicity_sum(T, points) >= -1e-10;
}

double grid_ball_sup(const ScalarFn& h, Index n, double radius, int points_per_axis) {
  if (n < 1 || !(radius > 0) || points_per_axis < 2) {
    throw std::invalid_argument("grid_ball_sup: bad arguments");
  }
  const double r2 = radius * radius * (1.0 + 1e-14);
  auto score = [&](const VectorXd& x) {
    if (x.squaredNorm() > r2) return HUGE_VAL;
    return -std::abs(h(x));
  };
  const Scan s = scan_grid(VectorXd::Zero(n), radius, points_per_axis, score);
  return -s.best;
}

}  // namespace glq::oracle
