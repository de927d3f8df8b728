#include "septel/cli.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

#include "septel/algebraic.hpp"
#include "septel/parse.hpp"
#include "septel/separability.hpp"
#include "septel/valdis.hpp"

namespace septel {

using nlohmann::json;

std::string version() { return "1.0.0"; }

OpKind parse_kind(const std::string& s) {
  if (s == "D" || s == "d" || s == "derivation") return OpKind::Derivation;
  if (s == "S" || s == "s" || s == "shift") return OpKind::Shift;
  throw std::invalid_argument("unknown operator kind '" + s + "' (expected D or S)");
}

json query_to_json(const Query& q) {
  json j = {{"command", q.command}, {"expr", q.expr}, {"vars", q.vars}};
  if (!q.mode.empty()) j["mode"] = q.mode;
  if (!q.at.empty()) j["at"] = q.at;
  if (!q.op.empty()) j["op"] = q.op;
  if (!q.point_a.empty()) j["a"] = q.point_a;
  if (q.degree_bound) j["degree_bound"] = *q.degree_bound;
  const std::string& c = q.command;
  if (c == "sep-rational" || c == "oracle" || c == "verify") j["kind"] = q.kind;
  if (c == "verify") j["class"] = q.cls;
  if (c == "reduce" || c == "dispersion") j["var"] = q.var;
  if (c == "oracle") {
    j["max_order"] = q.max_order;
    j["max_degree"] = q.max_degree;
  }
  if (c == "sep-algebraic") j["budget"] = q.budget;
  return j;
}

Query query_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("query must be a JSON object");
  Query q;
  for (const auto& [key, v] : j.items()) {
    if (key == "command") q.command = v.get<std::string>();
    else if (key == "mode") q.mode = v.get<std::string>();
    else if (key == "expr") q.expr = v.get<std::string>();
    else if (key == "vars") q.vars = v.get<std::vector<std::string>>();
    else if (key == "kind") q.kind = v.get<std::string>();
    else if (key == "var") q.var = v.get<std::string>();
    else if (key == "at") q.at = v.get<std::string>();
    else if (key == "op") q.op = v.get<std::string>();
    else if (key == "class") q.cls = v.get<std::string>();
    else if (key == "max_order") q.max_order = v.get<int>();
    else if (key == "max_degree") q.max_degree = v.get<int>();
    else if (key == "budget") q.budget = v.get<int>();
    else if (key == "degree_bound") q.degree_bound = v.get<int>();
    else if (key == "a") q.point_a = v.get<std::string>();
    else throw std::invalid_argument("unknown query key '" + key + "'");
  }
  return q;
}

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names for printing, with an extra symbol bound to a fresh id.
VarNames with_name(VarNames names, VarId v, const std::string& base) {
  std::string n = base;
  while (names.find(n) >= 0 && names.find(n) != v) n += "_";
  names.set(v, n);
  return names;
}

VarId lookup(const VarNames& names, const std::string& var) {
  VarId v = names.find(var);
  if (v < 0) throw UsageError("unknown variable '" + var + "'");
  return v;
}

json ext(const ExtInt& e) { return e.infinite ? json("inf") : json(e.value); }

std::string str(const Int& i) { return i.get_str(); }

json split_json(const SplitWitness& s, const VarNames& n) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back({{"param_part", to_string(t.param_part, n)}, {"t_part", to_string(t.t_part, n)}});
  return {{"den_rest", to_string(s.den_rest, n)}, {"den_t", to_string(s.den_t, n)}, {"terms", terms}};
}

json gp_json(const GPForm& g, const VarNames& n) {
  return {{"p", to_string(g.p, n)}, {"q", to_string(g.q, n)}, {"rhat", to_string(g.rhat, n)}, {"z", to_string(g.z, n)}};
}

json reduction_json(const ReductionResult& r, const VarNames& n) {
  return {{"g", to_string(r.g, n)}, {"remainder", to_string(r.remainder(), n)}};
}

json witnesses_json(const Witnesses& w, const VarNames& names) {
  json j = json::object();
  if (w.split) j["split"] = split_json(*w.split, names);
  if (w.gp) j["gp_form"] = gp_json(*w.gp, names);
  if (w.diff) {
    // z_var is fresh only with respect to the nonsplit part
    VarNames n = with_name(names, w.diff->z_var, "z");
    j["diff_split_form"] = {{"g", to_string(w.diff->g, names)},
                            {"nonsplit", to_string(w.diff->nonsplit(), names)},
                            {"polypart", to_string(w.diff->polypart, names)},
                            {"residue_resultant", to_string(w.diff->residue_resultant, n)},
                            {"split_simple", to_string(w.diff->split_simple, names)}};
  }
  if (w.reduction) j["reduction"] = reduction_json(*w.reduction, names);
  if (!w.log_parts.empty()) {
    json parts = json::array();
    for (const auto& [e, u] : w.log_parts) parts.push_back({{"factor", to_string(u, names)}, {"residue", str(e)}});
    j["log_parts"] = parts;
  }
  return j;
}

void put_verdict(json& out, const Verdict& v, const VarNames& names, const char* key = "separable") {
  out[key] = v.separable;
  out["certificate"] = v.certificate ? json(to_string(*v.certificate)) : json(nullptr);
  out["witnesses"] = witnesses_json(v.witnesses, names);
  out["diagnostics"] = v.diagnostics;
}

/// L(H) / H for a term H with D(H) = a H or S(H) = a H.
RatFunc apply_to_term(const OrePoly& l, const RatFunc& a) {
  RatFunc r(1), acc;
  for (int i = 0; i <= l.order(); ++i) {
    acc += to_ratfunc(l.coeff(i)) * r;
    r = l.kind() == OpKind::Derivation ? r.derivative(kT) + a * r : r * a.shift(kT, Rat(i));
  }
  return acc;
}

void check_certificate(const Verdict& v, const RatFunc& target, bool term, const char* what) {
  if (!v.certificate) return;
  RatFunc r = term ? apply_to_term(*v.certificate, target) : ore_apply(*v.certificate, target);
  if (!r.is_zero()) throw std::logic_error(std::string("emitted certificate fails on the ") + what);
}

std::string kpoly_string(const KPoly& p, VarId y, const VarNames& n) {
  RatFunc acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * RatFunc(MPoly::var(y)) + p.coeffs()[i].value();
  return to_string(acc, n);
}

json matrix_json(const Matrix<AlgElem>& m, const VarNames& n) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j).value(), n));
    rows.push_back(row);
  }
  return rows;
}

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

void run_algebraic(const Query& q, json& out, int& code) {
  std::vector<std::string> decl = q.vars;
  decl.push_back("Y");
  VarNames names = make_names(decl);
  AlgebraicInput in{parse_poly(q.expr, names), names.find("Y")};
  AlgebraicOptions opts;
  opts.budget = q.budget;
  opts.degree_bound = q.degree_bound;
  if (!q.point_a.empty()) {
    RatFunc a = parse_ratfunc(q.point_a, VarNames(std::vector<std::string>{}));
    if (!a.is_constant()) throw UsageError("the simple point coordinate must be a rational number");
    opts.simple_a = a.constant_value();
  }
  AlgebraicResult r = decide_algebraic_separable(in, opts);
  const AlgebraicWitness& w = r.witness;
  VarNames n = names;
  if (w.point) n = with_name(n, w.point->z, "z");
  for (std::size_t i = 0; i < w.symbols.size(); ++i) n = with_name(n, w.symbols[i], "z" + std::to_string(i + 1));

  put_verdict(out, r.verdict, n);
  json& wj = out["witnesses"];
  wj["lead_split"] = w.lead_split;
  wj["monic_poly"] = to_string(w.monic_poly, n);
  wj["ell"] = w.ell;
  if (w.point)
    wj["simple_point"] = {{"a", to_string(w.point->a)},
                          {"alpha", to_string(w.point->alpha.value(), n)},
                          {"minpoly", to_string(w.point->minpoly, n)}};
  if (w.pbar) wj["pbar"] = kpoly_string(*w.pbar, in.y, n);
  if (w.spec) {
    wj["disc_base"] = to_string(w.disc_base, n);
    wj["spec_point"] = {{"b", to_string(w.spec->b)}, {"c", rats_json(w.spec->c)}};
  }
  if (w.qbeta) {
    wj["qbeta"] = kpoly_string(*w.qbeta, in.y, n);
    wj["q"] = to_string(w.q, n);
  }
  if (w.a) wj["A"] = matrix_json(*w.a, n);
  if (w.b) wj["B"] = matrix_json(*w.b, n);
  if (w.solutions) {
    json sols = json::array();
    for (const auto& z : w.solutions->basis) sols.push_back(matrix_json(z, n));
    wj["solutions"] = sols;
    out["bound_used"] = {{"degree_bound", w.solutions->degree_bound_used}};
  }
  if (w.det_form) wj["det_form"] = to_string(w.det_form->value(), n);
  if (!w.zstar.empty()) wj["zstar"] = rats_json(w.zstar);
  wj["conjugation_verified"] = w.conjugation_verified;
  wj["bound_relative"] = r.bound_relative;
  if (r.bound_relative) code = 2;
}

void run(const Query& q, json& out, int& code) {
  const std::string& c = q.command;
  VarNames names = make_names(q.vars);
  auto rat = [&] { return parse_ratfunc(q.expr, names); };
  if (c == "sep-rational") {
    RatFunc f = rat();
    Verdict v = rational_separable(f, parse_kind(q.kind));
    check_certificate(v, f, false, "input");
    put_verdict(out, v, names);
  } else if (c == "sep-hyperexp" || c == "sep-hypergeom") {
    RatFunc a = rat();
    bool d = c == "sep-hyperexp";
    Verdict v = d ? hyperexp_separable(a) : hypergeom_separable(a);
    check_certificate(v, a, true, "term");
    put_verdict(out, v, names);
  } else if (c == "sep-algebraic") {
    run_algebraic(q, out, code);
  } else if (c == "telescoper") {
    if (q.mode != "st-dx" && q.mode != "dt-sx") throw UsageError("telescoper mode must be st-dx or dt-sx");
    if (q.vars.size() != 1) throw UsageError("telescoper takes exactly one parameter");
    RatFunc f = rat();
    Verdict v = q.mode == "st-dx" ? telescoper_exists_st_dx(f) : telescoper_exists_dt_sx(f);
    if (v.witnesses.reduction) check_certificate(v, v.witnesses.reduction->remainder(), false, "remainder");
    put_verdict(out, v, names, "exists");
  } else if (c == "reduce") {
    if (q.mode != "hermite" && q.mode != "abramov") throw UsageError("reduce mode must be hermite or abramov");
    RatFunc f = rat();
    VarId v = lookup(names, q.var);
    ReductionResult r = q.mode == "hermite" ? hermite_reduce(f, v) : abramov_reduce(f, v);
    if (!(r.recombine() == f)) throw std::logic_error("reduction does not reconstruct the input");
    out["witnesses"] = {{"reduction", reduction_json(r, names)}};
  } else if (c == "dispersion") {
    MPoly u = parse_poly(q.expr, names);
    VarId v = lookup(names, q.var);
    json w = {{"dispersion", ext(dispersion(u, v))}};
    if (!q.at.empty()) {
      MPoly p = parse_poly(q.at, names);
      w["local_dispersion"] = ext(local_dispersion(u, p, v));
      w["orbit_shifts"] = orbit_shifts(u, p, v);
    }
    out["witnesses"] = w;
  } else if (c == "gp-form") {
    GPForm g = gp_form(rat());
    out["witnesses"] = {{"gp_form", gp_json(g, names)}};
  } else if (c == "verify") {
    if (q.op.empty()) throw UsageError("verify needs an operator");
    out["verified"] = verify_certificate(q.expr, q.vars, q.op, parse_kind(q.kind), q.cls);
    out["certificate"] = to_string(parse_ore(q.op, parse_kind(q.kind)));
  } else if (c == "oracle") {
    RatFunc f = rat();
    auto l = brute_force_annihilator({f}, parse_kind(q.kind), q.max_order, q.max_degree);
    out["separable"] = l.has_value();
    out["certificate"] = l ? json(to_string(*l)) : json(nullptr);
    out["bound_used"] = {{"max_degree", q.max_degree}, {"max_order", q.max_order}};
    out["diagnostics"] = l ? "annihilator found" : "no annihilator within the bounds";
    if (!l) code = 2;
  } else {
    throw UsageError("unknown command '" + c + "'");
  }
}

}  // namespace

bool verify_certificate(const std::string& expr, const std::vector<std::string>& vars, const std::string& op,
                        OpKind kind, const std::string& cls) {
  RatFunc f = parse_ratfunc(expr, make_names(vars));
  OrePoly l = parse_ore(op, kind);
  if (l.is_zero()) return false;
  if (cls == "rational") return ore_apply(l, f).is_zero();
  if (cls == "hyperexp" && kind == OpKind::Derivation) return apply_to_term(l, f).is_zero();
  if (cls == "hypergeom" && kind == OpKind::Shift) return apply_to_term(l, f).is_zero();
  throw std::invalid_argument("class '" + cls + "' does not match operator kind");
}

Outcome run_command(const Query& q, bool timing) {
  Outcome o;
  json& out = o.result;
  out = {{"command", q.command}, {"input", query_to_json(q)}, {"version", version()}};
  out["certificate"] = nullptr;
  out["bound_used"] = nullptr;
  out["diagnostics"] = "";
  out["witnesses"] = json::object();
  auto start = std::chrono::steady_clock::now();
  try {
    run(q, out, o.exit_code);
  } catch (const ParseError& e) {
    out["error"] = {{"column", e.column()}, {"line", e.line()}, {"message", e.what()}, {"type", "parse"}};
    o.exit_code = 3;
  } catch (const UnsupportedFactorization& e) {
    out["error"] = {{"message", e.what()}, {"type", "unsupported"}};
    o.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    out["error"] = {{"message", e.what()}, {"type", "invalid"}};
    o.exit_code = 3;
  } catch (const std::exception& e) {
    out["error"] = {{"message", e.what()}, {"type", "internal"}};
    o.exit_code = 3;
  }
  if (o.exit_code == 3) out["diagnostics"] = out["error"]["message"];
  if (timing)
    out["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return o;
}

std::vector<Outcome> run_batch(const std::vector<std::string>& lines, bool timing) {
  auto one = [timing](const std::string& line) {
    json j;
    try {
      j = json::parse(line);
      return run_command(query_from_json(j), timing);
    } catch (const std::exception& e) {
      Outcome o;
      o.result = {{"command", j.is_object() && j.contains("command") ? j["command"] : json(nullptr)},
                  {"diagnostics", e.what()},
                  {"error", {{"message", e.what()}, {"type", "query"}}},
                  {"input", line},
                  {"version", version()}};
      o.exit_code = 3;
      return o;
    }
  };
  std::vector<Outcome> out(lines.size());
  const std::size_t width = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < lines.size(); begin += width) {
    std::vector<std::future<Outcome>> jobs;
    for (std::size_t i = begin; i < std::min(lines.size(), begin + width); ++i)
      jobs.push_back(std::async(std::launch::async, one, std::cref(lines[i])));
    for (std::size_t i = 0; i < jobs.size(); ++i) out[begin + i] = jobs[i].get();
  }
  return out;
}

}  // namespace septel
