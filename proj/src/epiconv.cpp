#include "glq/epiconv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "glq/envelope_inverse.hpp"
#include "glq/errors.hpp"
#include "glq/trust_region.hpp"

namespace glq {

EnvelopeCoeffs1D envelope_coeffs_1d(double a, double b, double c, double r) {
  if (!(a >= 0)) throw std::invalid_argument("envelope_coeffs_1d: a must be >= 0");
  if (!(r > 0)) throw std::invalid_argument("envelope_coeffs_1d: r must be > 0");
  const double d = 2.0 * a + r;
  return {a * r / d, b * r / d, c - b * b / (2.0 * d)};
}

QuadSeq1D family_1d(const std::string& name, double r) {
  QuadSeq1D s;
  s.r = r;
  if (name == "fk") {
    s.term = [](double k) { return Coeffs1D{1.0 + 1.0 / k, 2.0 + 1.0 / k, 1.0 + 1.0 / k}; };
  } else if (name == "gk") {
    s.term = [](double k) { return Coeffs1D{1.0 / k, 1.0 + 1.0 / k, 1.0 / k}; };
  } else if (name == "hk") {
    s.term = [](double k) { return Coeffs1D{k, 1.0 / k, 1.0 / k}; };
  } else {
    throw std::invalid_argument("unknown sequence family '" + name + "' (expected fk, gk or hk)");
  }
  return s;
}

QuadSeq1D explicit_1d(std::vector<Coeffs1D> terms, double r) {
  for (const auto& t : terms) {
    if (!(t.a >= 0)) throw std::invalid_argument("explicit sequence: a_k must be >= 0");
  }
  QuadSeq1D s;
  s.r = r;
  s.term = [terms = std::move(terms)](double k) {
    const auto idx = static_cast<long>(k) - 1;
    if (idx < 0 || idx >= static_cast<long>(terms.size()) || static_cast<double>(idx + 1) != k) {
      throw std::out_of_range("explicit sequence: probe index outside 1..N");
    }
    return terms[static_cast<std::size_t>(idx)];
  };
  return s;
}

std::string to_string(LimitKind k) {
  switch (k) {
    case LimitKind::affine:
      return "affine";
    case LimitKind::quadratic:
      return "quadratic";
    case LimitKind::indicator:
      return "indicator";
    case LimitKind::improper_plus_infinity:
      return "improper_plus_infinity";
    case LimitKind::improper_minus_infinity:
      return "improper_minus_infinity";
    case LimitKind::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

double max_diff(const EnvelopeCoeffs1D& u, const EnvelopeCoeffs1D& v) {
  return std::max({std::abs(u.alpha - v.alpha), std::abs(u.beta - v.beta),
                   std::abs(u.gamma - v.gamma)});
}

double eval_env(const EnvelopeCoeffs1D& e, double x) {
  return e.alpha * x * x + e.beta * x + e.gamma;
}

// Sign of a steady drift in the envelope values over the last three probes:
// +1 / -1 when every sample point moves the same way without slowing down.
int divergence_direction(const std::vector<double>& k, const std::vector<EnvelopeCoeffs1D>& env) {
  const std::size_t m = env.size();
  int dir = 0;
  for (double x : {-1.0, 0.0, 1.0}) {
    const double v0 = eval_env(env[m - 3], x);
    const double v1 = eval_env(env[m - 2], x);
    const double v2 = eval_env(env[m - 1], x);
    const double rate1 = (v1 - v0) / (k[m - 2] - k[m - 3]);
    const double rate2 = (v2 - v1) / (k[m - 1] - k[m - 2]);
    int d = 0;
    if (rate1 > 0 && rate2 > 0) d = 1;
    if (rate1 < 0 && rate2 < 0) d = -1;
    if (d == 0 || std::abs(rate2) < std::abs(rate1) * (1.0 - 1e-9)) return 0;
    if (dir != 0 && d != dir) return 0;
    dir = d;
  }
  return dir;
}

}  // namespace

LimitClassification1D classify_1d(const QuadSeq1D& seq, const std::vector<double>& k_probe,
                                  double tol) {
  if (k_probe.empty()) throw std::invalid_argument("classify_1d: empty probe list");
  if (k_probe.size() < 3) throw std::invalid_argument("classify_1d: need at least 3 probes");
  if (!(tol > 0)) throw std::invalid_argument("classify_1d: tol must be > 0");
  for (std::size_t i = 1; i < k_probe.size(); ++i) {
    if (!(k_probe[i] > k_probe[i - 1])) throw std::invalid_argument("classify_1d: probes must increase");
  }
  const double r = seq.r;
  std::vector<EnvelopeCoeffs1D> env;
  for (double k : k_probe) {
    const Coeffs1D t = seq.term(k);
    env.push_back(envelope_coeffs_1d(t.a, t.b, t.c, r));
  }

  LimitClassification1D out;
  for (std::size_t i = 1; i < env.size(); ++i) out.residuals.push_back(max_diff(env[i - 1], env[i]));

  if (out.residuals.back() > tol) {
    const int dir = divergence_direction(k_probe, env);
    if (dir < 0) out.kind = LimitKind::improper_minus_infinity;
    if (dir > 0) out.kind = LimitKind::improper_plus_infinity;
    return out;
  }

  // Richardson step in 1/k on the last two probes removes the leading tail term.
  const std::size_t m = env.size();
  const double k1 = k_probe[m - 2], k2 = k_probe[m - 1];
  auto extrap = [&](double v1, double v2) { return (k2 * v2 - k1 * v1) / (k2 - k1); };
  EnvelopeCoeffs1D lim{extrap(env[m - 2].alpha, env[m - 1].alpha),
                       extrap(env[m - 2].beta, env[m - 1].beta),
                       extrap(env[m - 2].gamma, env[m - 1].gamma)};
  if (std::abs(lim.alpha) <= tol) lim.alpha = 0.0;
  if (std::abs(lim.alpha - r / 2.0) <= tol) lim.alpha = r / 2.0;
  if (lim.alpha < 0.0 || lim.alpha > r / 2.0) return out;
  out.envelope = lim;

  const EnvelopeInverse1D inv = invert_envelope_1d(lim.alpha, lim.beta, lim.gamma, r);
  switch (inv.kind) {
    case EnvelopeInverse1D::Case::indicator:
      out.kind = LimitKind::indicator;
      out.params = {0.0, inv.b, inv.c};
      break;
    case EnvelopeInverse1D::Case::quadratic:
      out.kind = lim.alpha == 0.0 ? LimitKind::affine : LimitKind::quadratic;
      out.params = {inv.a, inv.b, inv.c};
      break;
    case EnvelopeInverse1D::Case::infeasible:
      break;
  }
  return out;
}

AwDistanceResult aw_distance(const QuadraticFunction& ef, const QuadraticFunction& eg,
                             int i_max) {
  if (ef.n() != eg.n()) throw DimensionMismatch("aw_distance: dimension mismatch");
  if (i_max < 1) throw std::invalid_argument("aw_distance: i_max must be >= 1");
  // Fix an orientation independent of argument order so d(f,g) and d(g,f)
  // share every floating point operation.
  auto key = [](const QuadraticFunction& q) {
    std::vector<double> v(q.Q().data(), q.Q().data() + q.Q().size());
    v.insert(v.end(), q.b().data(), q.b().data() + q.b().size());
    v.push_back(q.c());
    return v;
  };
  const bool swap = key(eg) < key(ef);
  const QuadraticFunction& p = swap ? eg : ef;
  const QuadraticFunction& q = swap ? ef : eg;
  const BallQuadratic h(p.Q() - q.Q(), p.b() - q.b(), p.c() - q.c());

  AwDistanceResult res;
  res.truncation_index = i_max;
  res.tail_bound = std::ldexp(1.0, -i_max);
  for (int i = 1; i <= i_max; ++i) {
    const double s = std::max(0.0, h.sup_abs_on_ball(static_cast<double>(i)));
    res.per_ball_sup.emplace_back(i, s);
    res.value += std::ldexp(1.0, -i) * s / (1.0 + s);
  }
  return res;
}

AwDistanceResult aw_distance(const GlqFunction& f, const GlqFunction& g, double r, int i_max) {
  if (!(r > 0)) throw std::invalid_argument("aw_distance: r must be > 0");
  return aw_distance(envelope(f, r), envelope(g, r), i_max);
}

MatrixXd graph_projector(const LinearRelation& A) { return A.graph().projector(); }

SequenceClassification classify_sequence(const std::vector<GlqFunction>& terms, double tol,
                                         const Tolerances& tols) {
  if (terms.size() < 2) throw std::invalid_argument("classify_sequence: need at least 2 terms");
  const Index n = terms.front().n();
  for (const auto& t : terms) {
    if (t.n() != n) throw DimensionMismatch("classify_sequence: mixed dimensions");
  }
  const GlqFunction& last = terms.back();
  const GlqFunction& prev = terms[terms.size() - 2];
  const MatrixXd P = graph_projector(last.relation());
  const MatrixXd D = P - graph_projector(prev.relation());

  SequenceClassification out;
  Eigen::SelfAdjointEigenSolver<MatrixXd> dz(D, Eigen::EigenvaluesOnly);
  out.projector_residual = dz.eigenvalues().cwiseAbs().maxCoeff();
  out.affine_residual = std::max({(last.shift() - prev.shift()).cwiseAbs().maxCoeff(),
                                  (last.linear() - prev.linear()).cwiseAbs().maxCoeff(),
                                  std::abs(last.constant() - prev.constant())});
  if (n == 0) out.affine_residual = std::abs(last.constant() - prev.constant());
  if (out.projector_residual > tol || out.affine_residual > tol) return out;

  Eigen::SelfAdjointEigenSolver<MatrixXd> es(P);
  std::vector<Index> keep;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  }
  MatrixXd G(2 * n, static_cast<Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) G.col(static_cast<Index>(j)) = es.eigenvectors().col(keep[j]);
  const LinearRelation L(Subspace::from_orthonormal(G));
  if (!is_maximal_monotone(L, tols) || !is_symmetric(L, tols)) return out;
  out.converged = true;
  out.limit.emplace(L, last.shift(), last.linear(), last.constant(), tols);
  return out;
}

}  // namespace glq
