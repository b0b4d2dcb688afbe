#include "glq/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace glq::io {

Json load(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw InputError("cannot open input file '" + path_or_inline + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

double parse_number(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return HUGE_VAL;
  }
  throw InputError(std::string(what) + ": expected a number");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

VectorXd parse_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of numbers");
  VectorXd v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_number(j[i], what);
  if (!v.allFinite()) throw InputError(std::string(what) + ": entries must be finite");
  return v;
}

MatrixXd parse_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of rows");
  const auto rows = static_cast<Index>(j.size());
  if (rows == 0) return MatrixXd(0, 0);
  const VectorXd first = parse_vector(j[0], what);
  MatrixXd M(rows, first.size());
  for (Index i = 0; i < rows; ++i) {
    const VectorXd row = parse_vector(j[static_cast<std::size_t>(i)], what);
    if (row.size() != M.cols()) throw InputError(std::string(what) + ": ragged rows");
    M.row(i) = row.transpose();
  }
  return M;
}

LinearRelation parse_relation(const Json& j, Index n_hint) {
  if (!j.is_object()) throw InputError("relation: expected an object");
  if (j.contains("matrix")) {
    const MatrixXd M = parse_matrix(j.at("matrix"), "relation.matrix");
    if (M.rows() != M.cols()) throw InputError("relation.matrix: must be square");
    return from_matrix(M);
  }
  if (j.contains("graph_basis")) {
    const Json& cols = j.at("graph_basis");
    if (!cols.is_array()) throw InputError("relation.graph_basis: expected a list of columns");
    if (cols.empty()) {
      if (n_hint <= 0) throw InputError("relation.graph_basis: empty basis needs a dimension");
      return LinearRelation(Subspace(2 * n_hint));
    }
    const MatrixXd C = parse_matrix(cols, "relation.graph_basis").transpose();
    if (C.rows() % 2 != 0) throw InputError("relation.graph_basis: columns must have length 2n");
    return from_graph_vectors(C);
  }
  if (j.contains("normal_cone_of_span")) {
    const Json& spec = j.at("normal_cone_of_span");
    Index n = n_hint;
    Json vecs = spec;
    if (spec.is_object()) {
      if (spec.contains("n")) n = spec.at("n").get<Index>();
      vecs = spec.contains("vectors") ? spec.at("vectors") : Json::array();
    }
    if (!vecs.is_array()) throw InputError("relation.normal_cone_of_span: expected a list of vectors");
    std::vector<VectorXd> v;
    for (const auto& e : vecs) v.push_back(parse_vector(e, "relation.normal_cone_of_span"));
    if (!v.empty()) {
      if (n > 0 && v.front().size() != n) throw InputError("relation.normal_cone_of_span: dimension mismatch");
      n = v.front().size();
    }
    if (n <= 0) throw InputError("relation.normal_cone_of_span: dimension unknown for an empty span");
    for (const auto& e : v) {
      if (e.size() != n) throw InputError("relation.normal_cone_of_span: vectors of different lengths");
    }
    return normal_cone_of(span(v, n));
  }
  if (j.contains("scaled_identity")) {
    const Json& s = j.at("scaled_identity");
    const auto n = field(s, "n").get<Index>();
    if (n <= 0) throw InputError("relation.scaled_identity: n must be positive");
    return scaled_identity(n, parse_number(field(s, "lambda"), "relation.scaled_identity.lambda"));
  }
  throw InputError("relation: expected one of matrix, graph_basis, normal_cone_of_span, scaled_identity");
}

GlqFunction parse_glq(const Json& j) {
  if (!j.is_object()) throw InputError("glq: expected an object");
  Index n_hint = 0;
  if (j.contains("a")) n_hint = static_cast<Index>(j.at("a").size());
  else if (j.contains("b")) n_hint = static_cast<Index>(j.at("b").size());
  const LinearRelation A = parse_relation(field(j, "relation"), n_hint);
  const Index n = A.n();
  const VectorXd a = j.contains("a") ? parse_vector(j.at("a"), "glq.a") : VectorXd::Zero(n);
  const VectorXd b = j.contains("b") ? parse_vector(j.at("b"), "glq.b") : VectorXd::Zero(n);
  const double c = j.contains("c") ? parse_number(j.at("c"), "glq.c") : 0.0;
  if (a.size() != n || b.size() != n) throw InputError("glq: a and b must have length n");
  return GlqFunction(A, a, b, c);
}

QuadraticFunction parse_quadratic(const Json& j) {
  const MatrixXd Q = parse_matrix(field(j, "Q"), "quadratic.Q");
  const VectorXd b = j.contains("b") ? parse_vector(j.at("b"), "quadratic.b") : VectorXd::Zero(Q.rows());
  const double c = j.contains("c") ? parse_number(j.at("c"), "quadratic.c") : 0.0;
  return QuadraticFunction(Q, b, c);
}

LeastSquaresProblem parse_lstsq(const Json& j) {
  const Json& p = j.contains("lstsq") ? j.at("lstsq") : j;
  LeastSquaresProblem out{parse_matrix(field(p, "M"), "lstsq.M"), parse_vector(field(p, "b"), "lstsq.b")};
  if (out.M.rows() != out.b.size()) throw InputError("lstsq: M must have as many rows as b has entries");
  return out;
}

Json number(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  if (std::isinf(v)) return "-inf";
  if (std::isnan(v)) return "nan";
  return v == 0.0 ? 0.0 : v;
}

Json number(ExtReal v) { return v.is_plus_infinity() ? Json("inf") : number(v.value()); }

Json to_json(const VectorXd& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
  return a;
}

Json to_json(const MatrixXd& M) {
  Json a = Json::array();
  for (Index i = 0; i < M.rows(); ++i) a.push_back(to_json(VectorXd(M.row(i).transpose())));
  return a;
}

Json to_json(const LinearRelation& A) {
  Json j;
  if (A.dom().dim() == A.n() && A.multivalued_part().dim() == 0) {
    j["matrix"] = to_json(A.selection());
  }
  Json cols = Json::array();
  const MatrixXd& G = A.graph().basis();
  for (Index c = 0; c < G.cols(); ++c) cols.push_back(to_json(VectorXd(G.col(c))));
  j["graph_basis"] = cols;
  return j;
}

Json to_json(const GlqFunction& f) {
  Json j;
  j["relation"] = to_json(f.relation());
  j["a"] = to_json(f.shift());
  j["b"] = to_json(f.linear());
  j["c"] = number(f.constant());
  return j;
}

Json to_json(const QuadraticFunction& f) {
  Json j;
  j["Q"] = to_json(f.Q());
  j["b"] = to_json(f.b());
  j["c"] = number(f.c());
  return j;
}

}  // namespace glq::io
