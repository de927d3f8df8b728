#pragma once

// Query dispatch behind the command-line tool, batch mode and the Python
// bindings. Results are JSON objects with sorted keys.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "septel/ore.hpp"

namespace septel {

struct Query {
  std::string command;
  /// st-dx | dt-sx for telescoper, hermite | abramov for reduce.
  std::string mode;
  std::string expr;
  std::vector<std::string> vars{"x"};
  /// D or S.
  std::string kind = "D";
  /// Variable for reduce and dispersion.
  std::string var = "t";
  /// dispersion: factor for the local dispersion.
  std::string at;
  /// verify: operator text; cls is rational | hyperexp | hypergeom.
  std::string op;
  std::string cls = "rational";
  int max_order = 3;
  int max_degree = 9;
  int budget = 50;
  std::optional<int> degree_bound;
  /// sep-algebraic: forced t-coordinate of the simple point.
  std::string point_a;
};

nlohmann::json query_to_json(const Query& q);
/// Throws std::invalid_argument on unknown keys or wrong types.
Query query_from_json(const nlohmann::json& j);

struct Outcome {
  nlohmann::json result;
  /// 0 decided, 2 "No" relative to a search bound, 3 unsupported or error.
  int exit_code = 0;
};

Outcome run_command(const Query& q, bool timing = false);

/// One JSON query per line; results in input order. Lines run concurrently.
std::vector<Outcome> run_batch(const std::vector<std::string>& lines, bool timing = false);

/// L(f) == 0 for cls rational; for hyperexp (hypergeom) expr is the
/// logarithmic derivative (shift quotient) a of a term H and the check is L(H) == 0.
bool verify_certificate(const std::string& expr, const std::vector<std::string>& vars, const std::string& op,
                        OpKind kind, const std::string& cls = "rational");

OpKind parse_kind(const std::string& s);
std::string version();

}  // namespace septel
