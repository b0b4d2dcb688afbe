#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glq/glq_function.hpp"

namespace glq {

struct Coeffs1D {
  double a = 0.0, b = 0.0, c = 0.0;
};

/// Envelope of a x^2 + b x + c as alpha x^2 + beta x + gamma.
struct EnvelopeCoeffs1D {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

EnvelopeCoeffs1D envelope_coeffs_1d(double a, double b, double c, double r);

/// k -> (a_k, b_k, c_k) together with the prox parameter.
struct QuadSeq1D {
  std::function<Coeffs1D(double)> term;
  double r = 1.0;
};

/// "fk": (1+1/k, 2+1/k, 1+1/k); "gk": (1/k, 1+1/k, 1/k); "hk": (k, 1/k, 1/k).
QuadSeq1D family_1d(const std::string& name, double r = 1.0);
/// Terms indexed from k = 1.
QuadSeq1D explicit_1d(std::vector<Coeffs1D> terms, double r = 1.0);

enum class LimitKind {
  affine,
  quadratic,
  indicator,
  improper_plus_infinity,
  improper_minus_infinity,
  undetermined
};

std::string to_string(LimitKind k);

struct LimitClassification1D {
  LimitKind kind = LimitKind::undetermined;
  /// Limit g(x) = a x^2 + b x + c, or iota_{b} + c for the indicator.
  Coeffs1D params;
  EnvelopeCoeffs1D envelope;
  /// max-norm differences of successive envelope triples over the probes.
  std::vector<double> residuals;
};

LimitClassification1D classify_1d(const QuadSeq1D& seq, const std::vector<double>& k_probe,
                                  double tol);

struct AwDistanceResult {
  double value = 0.0;
  int truncation_index = 0;
  double tail_bound = 1.0;
  std::vector<std::pair<int, double>> per_ball_sup;
};

AwDistanceResult aw_distance(const QuadraticFunction& ef, const QuadraticFunction& eg,
                             int i_max = 20);
AwDistanceResult aw_distance(const GlqFunction& f, const GlqFunction& g, double r = 1.0,
                             int i_max = 20);

struct SequenceClassification {
  bool converged = false;
  std::optional<GlqFunction> limit;
  /// Spectral distance between the last two graph projectors.
  double projector_residual = 0.0;
  /// Largest change in (a, b, c) between the last two terms.
  double affine_residual = 0.0;
};

SequenceClassification classify_sequence(const std::vector<GlqFunction>& terms, double tol,
                                         const Tolerances& tols = {});

/// 2n x 2n orthogonal projector onto the graph.
MatrixXd graph_projector(const LinearRelation& A);

}  // namespace glq
