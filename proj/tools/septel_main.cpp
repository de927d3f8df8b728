// septel: separability deciders, reductions and certificate checks from the shell.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "septel/cli.hpp"

namespace {

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_human(const nlohmann::json& r) {
  if (r.contains("error")) {
    std::cout << "error: " << r["error"]["message"].get<std::string>() << "\n";
    return;
  }
  for (const char* key : {"separable", "exists", "verified"})
    if (r.contains(key)) std::cout << key << ": " << (r[key].get<bool>() ? "yes" : "no") << "\n";
  if (!r["certificate"].is_null()) std::cout << "certificate: " << r["certificate"].get<std::string>() << "\n";
  if (!r["witnesses"].empty()) std::cout << "witnesses: " << r["witnesses"].dump(2) << "\n";
  if (!r["bound_used"].is_null()) std::cout << "bound_used: " << r["bound_used"].dump() << "\n";
  if (!r["diagnostics"].get<std::string>().empty())
    std::cout << "diagnostics: " << r["diagnostics"].get<std::string>() << "\n";
  if (r.contains("timing_ms")) std::cout << "timing_ms: " << r["timing_ms"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide separability in t of rational, hyperexponential, hypergeometric and algebraic functions"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "Print the JSON result");
  app.add_flag("--timing", timing, "Report elapsed milliseconds");
  app.set_version_flag("--version", septel::version());

  septel::Query q;
  std::string vars = "x";
  auto common = [&](CLI::App* s, const char* what) {
    s->add_option("expr", q.expr, what)->required();
    s->add_option("--vars", vars, "Comma-separated parameter names")->capture_default_str();
  };

  auto* rational = app.add_subcommand("sep-rational", "Separability of a rational function");
  common(rational, "Rational function in t and the parameters");
  rational->add_option("--kind", q.kind, "D or S")->capture_default_str();

  auto* hyperexp = app.add_subcommand("sep-hyperexp", "Separability of a hyperexponential term H with D(H)/H = a");
  common(hyperexp, "The logarithmic derivative a");
  auto* hypergeom = app.add_subcommand("sep-hypergeom", "Separability of a hypergeometric term H with S(H)/H = a");
  common(hypergeom, "The shift quotient a");

  auto* algebraic = app.add_subcommand("sep-algebraic", "Separability of an algebraic function with minimal polynomial P(t, params, Y)");
  common(algebraic, "Polynomial in t, the parameters and Y");
  algebraic->add_option("--budget", q.budget, "Search budget for points")->capture_default_str();
  algebraic->add_option("--degree-bound", q.degree_bound, "Degree bound for polynomial solutions");
  algebraic->add_option("--a", q.point_a, "Forced t-coordinate of the simple point");

  auto* telescoper = app.add_subcommand("telescoper", "Existence of telescopers for f in Q(t, x)");
  telescoper->add_option("mode", q.mode, "st-dx or dt-sx")->required()->check(CLI::IsMember({"st-dx", "dt-sx"}));
  common(telescoper, "Rational function in t and x");

  auto* reduce = app.add_subcommand("reduce", "Hermite or Abramov reduction");
  reduce->add_option("mode", q.mode, "hermite or abramov")->required()->check(CLI::IsMember({"hermite", "abramov"}));
  common(reduce, "Rational function");
  reduce->add_option("--var", q.var, "Reduction variable")->capture_default_str();

  auto* disp = app.add_subcommand("dispersion", "Dispersion and local dispersion of a polynomial");
  common(disp, "Polynomial");
  disp->add_option("--var", q.var, "Shift variable")->capture_default_str();
  disp->add_option("--at", q.at, "Irreducible factor for the local dispersion");

  auto* gp = app.add_subcommand("gp-form", "Canonical form z * S(p)/p * q/r of a shift quotient");
  common(gp, "Rational function a");

  auto* verify = app.add_subcommand("verify", "Check that an operator annihilates a function");
  common(verify, "Rational function, or the quotient a of a term H");
  verify->add_option("--op", q.op, "Operator in t and D or S")->required();
  verify->add_option("--kind", q.kind, "D or S")->capture_default_str();
  verify->add_option("--class", q.cls, "rational, hyperexp or hypergeom")
      ->capture_default_str()
      ->check(CLI::IsMember({"rational", "hyperexp", "hypergeom"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force annihilator search");
  common(oracle, "Rational function");
  oracle->add_option("--kind", q.kind, "D or S")->capture_default_str();
  oracle->add_option("--max-order", q.max_order)->capture_default_str();
  oracle->add_option("--max-degree", q.max_degree)->capture_default_str();

  auto* batch = app.add_subcommand("batch", "One JSON query per input line, one JSON result per output line");
  std::string batch_file;
  batch->add_option("file", batch_file, "Input file (default: standard input)");

  CLI11_PARSE(app, argc, argv);

  if (batch->parsed()) {
    std::ifstream file;
    if (!batch_file.empty()) {
      file.open(batch_file);
      if (!file) {
        std::cerr << "cannot open " << batch_file << "\n";
        return 3;
      }
    }
    std::istream& in = batch_file.empty() ? std::cin : file;
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    int code = 0;
    for (const auto& o : septel::run_batch(lines, timing)) {
      std::cout << o.result.dump() << "\n";
      code = std::max(code, o.exit_code);
    }
    return code;
  }

  q.command = app.get_subcommands().front()->get_name();
  q.vars = split_vars(vars);
  septel::Outcome o = septel::run_command(q, timing);
  if (as_json)
    std::cout << o.result.dump(2) << "\n";
  else
    print_human(o.result);
  return o.exit_code;
}
