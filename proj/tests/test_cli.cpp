#include <doctest.h>

#include <sstream>

#include "glq/cli.hpp"
#include "glq/json_io.hpp"

using namespace glq;
using glq::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kIndicator = R"({"relation": {"normal_cone_of_span": {"n": 1, "vectors": []}}, "a": [2], "c": 5})";

}  // namespace

TEST_CASE("eval on a shifted point indicator") {
  const Result at = run({"eval", "-i", kIndicator, "--x", "[2]"});
  CHECK(at.code == 0);
  CHECK(at.json()["value"].get<double>() == 5.0);
  const Result off = run({"eval", "-i", kIndicator, "--x", "[2.5]"});
  CHECK(off.code == 0);
  CHECK(off.json()["value"] == "inf");
}

TEST_CASE("invert-envelope exit codes") {
  const std::string q = R"({"Q": [[3,0],[0,3]]})";
  const Result bad = run({"invert-envelope", "-i", q, "-r", "1"});
  CHECK(bad.code == 3);
  CHECK(bad.json()["feasible"] == false);
  CHECK(bad.json()["reason"] == "gradient_lipschitz_exceeds_r");

  const Result good = run({"invert-envelope", "-i", q, "-r", "3"});
  CHECK(good.code == 0);
  const GlqFunction g = io::parse_glq(good.json()["g"]);
  CHECK(g.relation().dom().dim() == 0);
  CHECK(evaluate(g, VectorXd::Zero(2)).value() == doctest::Approx(0.0));
}

TEST_CASE("envelope then invert-envelope round trip") {
  const std::vector<std::string> inputs{
      R"({"relation": {"matrix": [[4]]}, "b": [3], "c": 2})",
      R"({"relation": {"matrix": [[2,1],[1,1]]}, "a": [1,-1], "b": [0.5,0], "c": -1})",
      R"({"relation": {"normal_cone_of_span": [[1,1]]}, "a": [0,2], "b": [1,-1], "c": 0.25})",
      kIndicator,
  };
  for (const auto& in : inputs) {
    const Result env = run({"envelope", "-i", in, "-r", "2"});
    REQUIRE(env.code == 0);
    const Result inv = run({"invert-envelope", "-i", env.out, "-r", "2"});
    REQUIRE(inv.code == 0);
    const GlqFunction g = io::parse_glq(inv.json()["g"]);
    CHECK(same_glq(g, io::parse_glq(io::load(in)), 1e-9));
  }
}

TEST_CASE("sample reproduces the first family at k = 1") {
  const Result s = run({"sample", "--family", "fk", "--k", "1", "--xmin", "-1", "--xmax", "1", "--step", "0.5"});
  CHECK(s.code == 0);
  std::istringstream lines(s.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,f_k,e_f_k");
  int rows = 0;
  bool saw_zero = false;
  while (std::getline(lines, line)) {
    ++rows;
    double x, f, e;
    char c1, c2;
    std::istringstream(line) >> x >> c1 >> f >> c2 >> e;
    if (x == 0.0) {
      saw_zero = true;
      CHECK(f == doctest::Approx(2.0));
      CHECK(e == doctest::Approx(1.1));
    }
  }
  CHECK(rows == 5);
  CHECK(saw_zero);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"eval", "-i", "{not json", "--x", "[0]"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"envelope", "-i", kIndicator, "--bogus"}).code == 2);
  CHECK(run({"envelope", "-i", kIndicator, "-r", "-1"}).code == 2);
  CHECK(run({"eval", "-i", kIndicator, "--x", "[1,2]"}).code == 2);
  CHECK(run({"eval", "-i", "/nonexistent/file.json", "--x", "[0]"}).code == 2);
  // Not monotone.
  CHECK(run({"envelope", "-i", R"({"relation": {"matrix": [[-1]]}})"}).code == 2);
  CHECK(run({"sample", "--family", "zk"}).code == 2);
  const Result r = run({"conjugate", "-i", R"({"relation": {"matrix": [[0,1],[-1,0]]}})"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("conjugate and prox outputs") {
  const Json c = run({"conjugate", "-i", R"({"relation": {"matrix": [[2]]}, "a": [1], "b": [3], "c": 1})"}).json();
  CHECK(c["relation"]["matrix"][0][0].get<double>() == doctest::Approx(0.5));
  CHECK(c["a"][0].get<double>() == doctest::Approx(3.0));
  CHECK(c["b"][0].get<double>() == doctest::Approx(1.0));
  CHECK(c["c"].get<double>() == doctest::Approx(-4.0));

  const Json p = run({"prox", "-i", R"({"relation": {"matrix": [[1]]}})", "-r", "1", "--x", "[2]"}).json();
  CHECK(p["prox"][0].get<double>() == doctest::Approx(1.0));
  CHECK(p["envelope_gradient"][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("check, distance, classify and lstsq") {
  const Json chk = run({"check", "-i", R"({"matrix": [[0.5,0],[0,0]]})"}).json();
  CHECK(chk["maximal_monotone"] == true);
  CHECK(chk["symmetric"] == true);
  CHECK(chk["dom_dim"] == 2);
  CHECK(chk["nonexpansive_report"]["firmly_nonexpansive"] == true);

  const std::string fg = R"({"f": {"relation": {"matrix": [[1]]}}, "g": {"relation": {"matrix": [[1]]}}})";
  CHECK(run({"distance", "-i", fg}).json()["value"].get<double>() == 0.0);

  const Json c1 = run({"classify-1d", "-i",
                       R"({"kind": "formula_1d", "name": "gk", "k_list": [1000, 5000, 9998, 9999, 10000]})"})
                      .json();
  CHECK(c1["kind"] == "affine");

  const std::string seq = R"({"terms": [{"relation": {"matrix": [[1]]}}, {"relation": {"matrix": [[1]]}},
                                         {"relation": {"matrix": [[1]]}}]})";
  CHECK(run({"classify-seq", "-i", seq}).json()["converged"] == true);

  const Json ls = run({"lstsq", "-i", R"({"lstsq": {"M": [[1,0],[0,0]], "b": [1,1]}})"}).json();
  CHECK(ls["min_norm_solution"][0].get<double>() == doctest::Approx(1.0));
  CHECK(ls["min_norm_solution"][1].get<double>() == doctest::Approx(0.0));
  CHECK(ls["domain_basis"].size() == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"envelope", "-i", R"({"relation": {"matrix": [[2,1],[1,3]]}, "c": 1})"};
  CHECK(run(args).out == run(args).out);
}
