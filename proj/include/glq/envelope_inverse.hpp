#pragma once

#include <optional>
#include <string>

#include "glq/glq_function.hpp"

namespace glq {

enum class InverseReason { ok, gradient_lipschitz_exceeds_r };

std::string to_string(InverseReason r);

struct EnvelopeInverseReport {
  bool feasible = false;
  InverseReason reason = InverseReason::ok;
  /// Largest eigenvalue of the quadratic's Hessian.
  double lipschitz_bound = 0.0;
  std::optional<GlqFunction> g;
};

/// Finds g with envelope(g, r) = f, or reports that none exists.
EnvelopeInverseReport invert_envelope(const QuadraticFunction& f, double r,
                                      const Tolerances& tol = {});

/// One-dimensional f(x) = alpha x^2 + beta x + gamma.
struct EnvelopeInverse1D {
  enum class Case { quadratic, indicator, infeasible };
  Case kind = Case::infeasible;
  /// g(x) = a x^2 + b x + c (quadratic) or iota_{b} + c (indicator).
  double a = 0.0, b = 0.0, c = 0.0;
  EnvelopeInverseReport report;
};

EnvelopeInverse1D invert_envelope_1d(double alpha, double beta, double gamma, double r,
                                     const Tolerances& tol = {});

struct NonexpansiveReport {
  bool nonexpansive = false;
  bool firmly = false;
  /// P with (P + Id)^{-1} = M, when M is nonexpansive.
  std::optional<LinearRelation> relation_P;
};

NonexpansiveReport nonexpansive_report(const MatrixXd& M, const Tolerances& tol = {});

}  // namespace glq
