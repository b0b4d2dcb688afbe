#include "glq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "glq/envelope_inverse.hpp"
#include "glq/epiconv.hpp"
#include "glq/errors.hpp"
#include "glq/json_io.hpp"
#include "glq/least_squares.hpp"

namespace glq::cli {

namespace {

using io::Json;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

VectorXd parse_point(const std::string& text, Index n) {
  const VectorXd x = io::parse_vector(io::load(text), "--x");
  if (x.size() != n) throw io::InputError("--x: expected a vector of length " + std::to_string(n));
  return x;
}

Json limit_json(const LimitClassification1D& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  Json p;
  switch (c.kind) {
    case LimitKind::quadratic:
    case LimitKind::affine:
      p["a"] = io::number(c.params.a);
      p["b"] = io::number(c.params.b);
      p["c"] = io::number(c.params.c);
      break;
    case LimitKind::indicator:
      p["point"] = io::number(c.params.b);
      p["c"] = io::number(c.params.c);
      break;
    default:
      break;
  }
  j["params"] = p;
  if (c.kind != LimitKind::undetermined && c.kind != LimitKind::improper_minus_infinity &&
      c.kind != LimitKind::improper_plus_infinity) {
    j["envelope"] = {{"alpha", io::number(c.envelope.alpha)},
                     {"beta", io::number(c.envelope.beta)},
                     {"gamma", io::number(c.envelope.gamma)}};
  }
  Json res = Json::array();
  for (double r : c.residuals) res.push_back(io::number(r));
  j["residuals"] = res;
  return j;
}

std::vector<GlqFunction> parse_terms(const Json& j) {
  const Json& list = j.is_array() ? j : (j.contains("terms") ? j.at("terms") : Json());
  if (!list.is_array()) throw io::InputError("sequence: expected a list of GLQ terms");
  std::vector<GlqFunction> out;
  for (const auto& t : list) out.push_back(io::parse_glq(t));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear relations and generalized linear-quadratic functions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input;
  std::string xs;
  double r = 1.0;
  int imax = 20;
  double tol = 1e-6;
  std::string family = "fk";
  double k = 1.0, xmin = -3.0, xmax = 3.0, step = 0.5;

  auto add_input = [&](CLI::App* s) { s->add_option("-i,--input", input, "JSON file or inline JSON")->required(); };
  auto add_r = [&](CLI::App* s) {
    s->add_option("-r,--r", r, "prox parameter")->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "evaluate a GLQ function");
  add_input(eval);
  eval->add_option("--x", xs, "point as a JSON array")->required();

  auto* env = app.add_subcommand("envelope", "Moreau envelope of a GLQ function");
  add_input(env);
  add_r(env);

  auto* prx = app.add_subcommand("prox", "proximal point and envelope gradient");
  add_input(prx);
  add_r(prx);
  prx->add_option("--x", xs, "point as a JSON array")->required();

  auto* conj = app.add_subcommand("conjugate", "Fenchel conjugate of a GLQ function");
  add_input(conj);

  auto* inv = app.add_subcommand("invert-envelope", "recover g from a quadratic envelope");
  add_input(inv);
  add_r(inv);

  auto* chk = app.add_subcommand("check", "predicates of a relation");
  add_input(chk);

  auto* dist = app.add_subcommand("distance", "Attouch-Wets distance between two GLQ functions");
  add_input(dist);
  add_r(dist);
  dist->add_option("--imax", imax, "truncation index")->check(CLI::PositiveNumber);

  auto* c1 = app.add_subcommand("classify-1d", "limit of a 1-D quadratic sequence");
  add_input(c1);
  add_r(c1);
  c1->add_option("--tol", tol, "Cauchy tolerance")->check(CLI::PositiveNumber);

  auto* cs = app.add_subcommand("classify-seq", "limit of a sequence of GLQ functions");
  add_input(cs);
  cs->add_option("--tol", tol, "Cauchy tolerance")->check(CLI::PositiveNumber);

  auto* ls = app.add_subcommand("lstsq", "least-squares conjugate, domain and min-norm solution");
  add_input(ls);

  auto* smp = app.add_subcommand("sample", "CSV of x, f_k(x), e_r f_k(x)");
  smp->add_option("--family", family, "fk, gk or hk")->check(CLI::IsMember({"fk", "gk", "hk"}));
  smp->add_option("--k", k, "sequence index")->check(CLI::PositiveNumber);
  smp->add_option("--xmin", xmin);
  smp->add_option("--xmax", xmax);
  smp->add_option("--step", step)->check(CLI::PositiveNumber);
  add_r(smp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (eval->parsed()) {
      const GlqFunction f = io::parse_glq(io::load(input));
      emit(out, {{"value", io::number(evaluate(f, parse_point(xs, f.n())))}});
    } else if (env->parsed()) {
      emit(out, io::to_json(envelope(io::parse_glq(io::load(input)), r)));
    } else if (prx->parsed()) {
      const GlqFunction f = io::parse_glq(io::load(input));
      const VectorXd x = parse_point(xs, f.n());
      const VectorXd p = prox(f, r, x);
      emit(out, {{"prox", io::to_json(p)}, {"envelope_gradient", io::to_json(VectorXd(r * (x - p)))}});
    } else if (conj->parsed()) {
      emit(out, io::to_json(conjugate(io::parse_glq(io::load(input)))));
    } else if (inv->parsed()) {
      const EnvelopeInverseReport rep = invert_envelope(io::parse_quadratic(io::load(input)), r);
      Json j;
      j["feasible"] = rep.feasible;
      j["reason"] = to_string(rep.reason);
      j["lipschitz_bound"] = io::number(rep.lipschitz_bound);
      if (rep.g) j["g"] = io::to_json(*rep.g);
      emit(out, j);
      return rep.feasible ? ok : infeasible;
    } else if (chk->parsed()) {
      const Json in = io::load(input);
      const LinearRelation A = io::parse_relation(in.contains("relation") ? in.at("relation") : in);
      Json j;
      j["n"] = A.n();
      j["graph_dim"] = A.graph().dim();
      j["dom_dim"] = A.dom().dim();
      j["ran_dim"] = A.ran().dim();
      j["monotone"] = is_monotone(A);
      j["symmetric"] = is_symmetric(A);
      j["maximal_monotone"] = is_maximal_monotone(A);
      if (in.contains("matrix")) {
        const MatrixXd M = io::parse_matrix(in.at("matrix"), "matrix");
        try {
          const NonexpansiveReport nr = nonexpansive_report(M);
          Json ne;
          ne["nonexpansive"] = nr.nonexpansive;
          ne["firmly_nonexpansive"] = nr.firmly;
          if (nr.relation_P) ne["relation_P"] = io::to_json(*nr.relation_P);
          j["nonexpansive_report"] = ne;
        } catch (const std::invalid_argument&) {
          j["nonexpansive_report"] = nullptr;
        }
      }
      emit(out, j);
    } else if (dist->parsed()) {
      const Json in = io::load(input);
      const GlqFunction f = io::parse_glq(in.at("f"));
      const GlqFunction g = io::parse_glq(in.at("g"));
      const AwDistanceResult d = aw_distance(f, g, r, imax);
      Json balls = Json::array();
      for (const auto& [i, s] : d.per_ball_sup) balls.push_back({{"i", i}, {"sup", io::number(s)}});
      emit(out, {{"value", io::number(d.value)},
                 {"truncation_index", d.truncation_index},
                 {"tail_bound", io::number(d.tail_bound)},
                 {"per_ball_sup", balls}});
    } else if (c1->parsed()) {
      const Json in = io::load(input);
      const std::string kind = in.value("kind", "");
      LimitClassification1D c;
      if (kind == "formula_1d") {
        const QuadSeq1D seq = family_1d(in.at("name").get<std::string>(), r);
        const std::vector<double> ks = in.at("k_list").get<std::vector<double>>();
        c = classify_1d(seq, ks, tol);
      } else if (kind == "explicit") {
        std::vector<Coeffs1D> terms;
        for (const auto& t : in.at("terms")) {
          terms.push_back({t.at("a").get<double>(), t.at("b").get<double>(), t.at("c").get<double>()});
        }
        std::vector<double> ks(terms.size());
        for (std::size_t i = 0; i < ks.size(); ++i) ks[i] = static_cast<double>(i + 1);
        c = classify_1d(explicit_1d(terms, r), ks, tol);
      } else {
        throw io::InputError("sequence: kind must be 'explicit' or 'formula_1d'");
      }
      emit(out, limit_json(c));
    } else if (cs->parsed()) {
      const SequenceClassification c = classify_sequence(parse_terms(io::load(input)), tol);
      Json j;
      j["converged"] = c.converged;
      j["projector_residual"] = io::number(c.projector_residual);
      j["affine_residual"] = io::number(c.affine_residual);
      j["limit"] = c.limit ? io::to_json(*c.limit) : Json(nullptr);
      emit(out, j);
    } else if (ls->parsed()) {
      const LeastSquaresProblem p = io::parse_lstsq(io::load(input));
      const Subspace dom = lstsq_domain(p);
      Json basis = Json::array();
      for (Index c = 0; c < dom.dim(); ++c) basis.push_back(io::to_json(VectorXd(dom.basis().col(c))));
      emit(out, {{"conjugate", io::to_json(lstsq_conjugate(p))},
                 {"domain_basis", basis},
                 {"min_norm_solution", io::to_json(lstsq_min_norm_solution(p))}});
    } else if (smp->parsed()) {
      if (!(xmax >= xmin)) throw io::InputError("sample: xmax must be >= xmin");
      const Coeffs1D t = family_1d(family, r).term(k);
      const EnvelopeCoeffs1D e = envelope_coeffs_1d(t.a, t.b, t.c, r);
      out << "x,f_k,e_f_k\n" << std::setprecision(12);
      const auto count = static_cast<long>(std::floor((xmax - xmin) / step + 1e-9));
      for (long i = 0; i <= count; ++i) {
        const double x = xmin + static_cast<double>(i) * step;
        out << x << "," << t.a * x * x + t.b * x + t.c << ","
            << e.alpha * x * x + e.beta * x + e.gamma << "\n";
      }
    }
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    err << "error: bad input: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return ok;
}

}  // namespace glq::cli
