#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "glq/epiconv.hpp"
#include "glq/glq_function.hpp"
#include "glq/least_squares.hpp"

namespace glq::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load(const std::string& path_or_inline);

VectorXd parse_vector(const Json& j, const char* what);
MatrixXd parse_matrix(const Json& j, const char* what);

/// n_hint (or 0) supplies the dimension when the schema cannot, e.g. N_{0}.
LinearRelation parse_relation(const Json& j, Index n_hint = 0);
GlqFunction parse_glq(const Json& j);
QuadraticFunction parse_quadratic(const Json& j);
LeastSquaresProblem parse_lstsq(const Json& j);

Json number(double v);
Json number(ExtReal v);
Json to_json(const VectorXd& v);
Json to_json(const MatrixXd& M);
Json to_json(const LinearRelation& A);
Json to_json(const GlqFunction& f);
Json to_json(const QuadraticFunction& f);

}  // namespace glq::io
