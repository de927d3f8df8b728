#include "doctest.h"
#include "septel/cli.hpp"
#include "septel/parse.hpp"

using namespace septel;

namespace {

Outcome run(const std::string& command, const std::string& expr, const std::string& mode = "",
            const std::string& kind = "D") {
  Query q;
  q.command = command;
  q.expr = expr;
  q.mode = mode;
  q.kind = kind;
  return run_command(q);
}

}  // namespace

TEST_CASE("command results") {
  auto a = run("sep-rational", "1/(t*x)", "", "S");
  CHECK(a.exit_code == 0);
  CHECK(a.result["separable"] == true);
  CHECK(a.result["certificate"] == "(t+1)*S - t");

  auto b = run("sep-algebraic", "Y^2 - 2*(x*t+1)*Y + (x*t+1)^2 - t");
  CHECK(b.exit_code == 0);
  CHECK(b.result["separable"] == true);
  CHECK(b.result["witnesses"]["simple_point"]["alpha"] == "x");

  auto c = run("telescoper", "1/(x^2+t)", "st-dx");
  CHECK(c.result["exists"] == false);
  CHECK_FALSE(c.result.contains("separable"));

  auto d = run("sep-algebraic", "Y^2 - (t+x)");
  CHECK(d.exit_code == 2);
  CHECK(d.result["separable"] == false);

  auto e = run("oracle", "1/(t+x)");
  CHECK(e.exit_code == 2);
  CHECK(e.result["bound_used"]["max_order"] == 3);

  auto f = run("reduce", "1/(t+x)^2", "hermite");
  CHECK(f.result["witnesses"]["reduction"]["g"] == "-1/(t + x)");

  auto g = run("gp-form", "(t+x+1)/(t+x)");
  CHECK(g.result["witnesses"]["gp_form"]["p"] == "t + x");
}

TEST_CASE("errors map to exit code 3") {
  auto a = run("sep-rational", "t+");
  CHECK(a.exit_code == 3);
  CHECK(a.result["error"]["type"] == "parse");
  CHECK(a.result["error"]["column"] == 3);
  CHECK(run("sep-rational", "1/(t+y)").exit_code == 3);
  CHECK(run("sep-rational", "1/(t-t)").exit_code == 3);
  CHECK(run("sep-hyperexp", "0").exit_code == 3);
  CHECK(run("telescoper", "1/t", "sideways").exit_code == 3);
  CHECK(run("frobnicate", "1").exit_code == 3);
  CHECK(run("sep-algebraic", "(Y-t)^2").exit_code == 3);
}

TEST_CASE("certificate verification") {
  CHECK(verify_certificate("1/t", {"x"}, "t*D + 1", OpKind::Derivation));
  CHECK_FALSE(verify_certificate("1/(t+x)", {"x"}, "D", OpKind::Derivation));
  CHECK(verify_certificate("(t+x+1)/(t+x)", {"x"}, "S^2 - 2*S + 1", OpKind::Shift, "hypergeom"));
  CHECK(verify_certificate("5/(t+x)+2", {"x"}, "(D-2)^6", OpKind::Derivation, "hyperexp"));
  CHECK_FALSE(verify_certificate("5/(t+x)+2", {"x"}, "(D-2)^5", OpKind::Derivation, "hyperexp"));
  CHECK_THROWS_AS(verify_certificate("1/t", {"x"}, "x*D", OpKind::Derivation), std::invalid_argument);
  CHECK_THROWS(verify_certificate("1/t", {"x"}, "t*D", OpKind::Derivation, "hypergeom"));
}

TEST_CASE("queries and batches") {
  Query q;
  q.command = "oracle";
  q.expr = "1/t";
  q.max_degree = 4;
  Query r = query_from_json(query_to_json(q));
  CHECK(r.command == "oracle");
  CHECK(r.max_degree == 4);
  CHECK_THROWS_AS(query_from_json(nlohmann::json{{"colour", "red"}}), std::invalid_argument);

  auto out = run_batch({R"q({"command":"sep-rational","expr":"1/t"})q", "{", R"q({"command":"dispersion","expr":"t*(t+3)"})q"});
  REQUIRE(out.size() == 3);
  CHECK(out[0].result["separable"] == true);
  CHECK(out[1].exit_code == 3);
  CHECK(out[2].result["witnesses"]["dispersion"] == 3);
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_ratfunc("t+");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK(to_string(parse_poly("(t^2+1)*(x+2)")) == to_string(parse_poly("t^2*x + 2*t^2 + x + 2")));
}
