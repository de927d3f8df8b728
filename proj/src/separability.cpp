#include "septel/separability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "septel/pfrac.hpp"
#include "septel/roots.hpp"
#include "septel/valdis.hpp"

namespace septel {

namespace {

constexpr VarSet kTBit = var_bit(kT);

VarSet params_of(const RatFunc& f) { return f.support() & ~kTBit; }

RatFunc monic_in_t(const MPoly& p) { return RatFunc(p) / RatFunc(p.lead_coeff_in(kT)); }

MPoly pp_in_t(const MPoly& p) { return p.degree(kT) < 1 ? MPoly(1) : content_pp_in(p, kT).pp; }

/// First-order operator annihilating g in Q(t), g != 0.
OrePoly first_order(const RatFunc& g, OpKind kind) {
  QFrac q = to_qfrac(g);
  QFrac ratio = kind == OpKind::Derivation ? q.derivative() / q : q.shift(Rat(1)) / q;
  return OrePoly(kind, {-ratio, QFrac(1)});
}

VarId single_param(const RatFunc& f) {
  VarSet ps = params_of(f);
  if (ps == 0) return kX;
  if ((ps & (ps - 1)) != 0) throw std::invalid_argument("telescoper deciders take exactly one parameter");
  VarId v = 0;
  while (!contains(ps, v)) ++v;
  return v;
}

}  // namespace

RatFunc GPForm::recombine() const { return z * (p.shift(kT, Rat(1)) / p) * (q / rhat); }

RatFunc DiffSplitForm::recombine() const { return g.derivative(kT) + polypart + split_simple + nonsplit(); }

bool is_split(const MPoly& q, const std::vector<VarSet>& partition) {
  if (q.is_zero()) throw std::invalid_argument("is_split of the zero polynomial");
  std::vector<VarSet> blocks = partition;
  VarSet covered = 0;
  for (VarSet b : blocks) covered |= b;
  if (VarSet rest = q.support() & ~covered) blocks.push_back(rest);
  MPoly r = q;
  for (VarSet b : blocks) {
    if ((r.support() & b) == 0) continue;
    MPoly c = content_pp(r, b).content;
    r = divide_exact(r, c);
  }
  return r.is_constant();
}

SplitPart split_part(const MPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("split_part of the zero polynomial");
  VarSet ps = d.support() & ~kTBit;
  if (ps == 0) return {normalize(d), MPoly(1)};
  VarId next = fresh_var({&d}, 1);
  std::vector<VarId> map(kMaxVars);
  for (VarId v = 0; v < kMaxVars; ++v) map[v] = v;
  for (VarId v = 1; v < kMaxVars; ++v)
    if (contains(ps, v)) {
      if (next >= kMaxVars) throw std::length_error("too many variables for the split-part test");
      map[v] = next++;
    }
  MPoly s = mp_gcd(d, d.rename(map));
  if (s.degree(kT) < 1) s = MPoly(1);
  return {s, divide_exact(d, s)};
}

// ---------------------------------------------------------------------------
// Rational functions

Verdict rational_separable(const RatFunc& f, OpKind kind) {
  Verdict out;
  if (f.is_zero()) {
    out.separable = true;
    out.certificate = OrePoly::constant(kind, QFrac(1));
    out.diagnostics = "zero function";
    return out;
  }
  const MPoly& den = f.den();
  SplitWitness w;
  if (den.degree(kT) >= 1) {
    ContentPP cp = content_pp(den, kTBit);
    w.den_t = cp.content;
    w.den_rest = cp.pp;
  } else {
    w.den_rest = den;
  }
  if (w.den_rest.depends_on(kT)) {
    SplitPart sp = split_part(den);
    w.den_t = sp.split;
    w.den_rest = sp.nonsplit;
    out.witnesses.split = w;
    out.diagnostics = "denominator is not split in t and the parameters";
    return out;
  }

  // num = sum a_m(t) m(params)
  std::map<std::vector<std::uint16_t>, std::pair<Monomial, std::vector<MPoly::Term>>> groups;
  for (const auto& term : f.num().terms()) {
    Monomial tm = Monomial::var(kT, term.mono[kT]);
    Monomial pm = term.mono / tm;
    auto& g = groups[std::vector<std::uint16_t>(pm.exp.begin(), pm.exp.end())];
    g.first = pm;
    g.second.push_back({tm, term.coeff});
  }
  std::vector<MPoly> a;
  for (auto& [key, g] : groups) {
    MPoly am = MPoly::from_terms(g.second);
    a.push_back(am);
    w.terms.push_back({RatFunc(am, w.den_t), RatFunc(MPoly::monomial(g.first, Rat(1)), w.den_rest)});
  }

  // The span of the t-parts over Q needs one first-order factor per basis element.
  int deg = 0;
  for (const auto& am : a) deg = std::max(deg, am.degree(kT));
  Matrix<Rat> m(a.size(), static_cast<std::size_t>(deg + 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& term : a[i].terms()) m(i, term.mono[kT]) = term.coeff;
  std::size_t r = rref(m).size();
  std::vector<OrePoly> ops;
  for (std::size_t i = 0; i < r; ++i) {
    MPoly b;
    for (int j = 0; j <= deg; ++j) b += MPoly::var(kT, static_cast<unsigned>(j)) * m(i, j);
    ops.push_back(first_order(RatFunc(b, w.den_t), kind));
  }
  OrePoly cert = ops.size() == 1 ? ops[0].monic() : ore_lclm(ops);
  if (!ore_apply(cert, f).is_zero()) throw std::logic_error("certificate does not annihilate the input");
  out.separable = true;
  out.certificate = cert;
  out.witnesses.split = std::move(w);
  out.diagnostics = "denominator is split; " + std::to_string(r) + " independent t-parts";
  return out;
}

// ---------------------------------------------------------------------------
// Hypergeometric certificates

GPForm gp_form(const RatFunc& a) {
  if (a.is_zero()) throw DegenerateInput("the certificate a must be nonzero");
  MPoly A = a.num(), B = a.den(), C(1);
  if (A.degree(kT) >= 1 && B.degree(kT) >= 1) {
    for (const Int& hz : shift_candidates(A, B, kT)) {
      if (hz < 0 || !hz.fits_slong_p()) continue;
      long h = hz.get_si();
      for (;;) {
        MPoly g = mp_gcd(A, B.shift(kT, Rat(h)));
        if (g.degree(kT) < 1) break;
        g = pp_in_t(g);
        A = divide_exact(A, g);
        B = divide_exact(B, g.shift(kT, Rat(-h)));
        for (long i = 1; i <= h; ++i) C *= g.shift(kT, Rat(-i));
      }
    }
  }
  GPForm out;
  out.p = monic_in_t(C);
  out.q = monic_in_t(A);
  out.rhat = monic_in_t(B);
  out.z = RatFunc(A.lead_coeff_in(kT)) / RatFunc(B.lead_coeff_in(kT));
  if (out.recombine() != a) throw std::logic_error("GP form does not recombine");
  return out;
}

Verdict hypergeom_separable(const RatFunc& a) {
  Verdict out;
  GPForm gp = gp_form(a);
  bool z_ok = gp.z.free_of(~kTBit);
  bool q_ok = gp.q.is_polynomial() && gp.q.free_of(~kTBit);
  bool r_ok = gp.rhat.is_polynomial() && gp.rhat.free_of(~kTBit);
  out.separable = z_ok && q_ok && r_ok;
  if (out.separable)
    out.diagnostics = "z is a rational number and q, rhat lie in Q[t]";
  else if (!z_ok)
    out.diagnostics = "z depends on the parameters";
  else
    out.diagnostics = std::string(q_ok ? "rhat" : "q") + " does not lie in Q[t]";
  out.witnesses.gp = std::move(gp);
  return out;
}

// ---------------------------------------------------------------------------
// Hyperexponential certificates

DiffSplitForm diff_split_form(const RatFunc& a) {
  DiffSplitForm out;
  RPoly num = to_rpoly(a.num(), kT), den = to_rpoly(a.den(), kT);
  auto [poly, proper] = divrem(num, den);
  out.polypart = from_rpoly(poly, kT);
  RatFunc rest = from_rpoly(proper, kT) / RatFunc(a.den());
  if (rest.is_zero()) return out;

  ReductionResult h = hermite_reduce(rest, kT);
  out.g = h.g;
  RatFunc rem = h.remainder();
  if (!rem.is_zero()) {
    SplitPart sp = split_part(pp_in_t(rem.den()));
    std::vector<FactorPower> fs;
    if (sp.split.degree(kT) >= 1) fs.push_back({sp.split, 1});
    if (sp.nonsplit.degree(kT) >= 1) fs.push_back({sp.nonsplit, 1});
    PartialFraction pf = partial_fractions(rem, kT, fs);
    RatFunc nonsplit;
    for (const auto& part : pf.parts) {
      RatFunc term = part.numerator / RatFunc(part.factor);
      if (part.factor.free_of(~kTBit))
        out.split_simple += term;
      else
        nonsplit += term;
    }
    out.polypart += from_rpoly(pf.polypart, kT);
    out.nonsplit_num = nonsplit.num();
    out.nonsplit_den = nonsplit.den();
  }
  out.z_var = fresh_var({&out.nonsplit_num, &out.nonsplit_den}, 1);
  if (!out.nonsplit_num.is_zero()) {
    MPoly zv = MPoly::var(out.z_var);
    out.residue_resultant =
        resultant(out.nonsplit_den, out.nonsplit_num - zv * out.nonsplit_den.derivative(kT), kT);
  }
  if (out.recombine() != a) throw std::logic_error("differential split form does not recombine");
  return out;
}

Verdict hyperexp_separable(const RatFunc& a) {
  if (a.is_zero()) throw DegenerateInput("the certificate a must be nonzero");
  Verdict out;
  DiffSplitForm d = diff_split_form(a);
  auto finish = [&](std::string why) {
    out.diagnostics = std::move(why);
    out.witnesses.diff = d;
    return out;
  };
  const VarSet params = ~kTBit;
  if (!d.g.free_of(params)) return finish("Hermite part depends on the parameters");
  if (!d.polypart.free_of(params)) return finish("polynomial part depends on the parameters");
  if (!d.split_simple.free_of(params)) return finish("split simple part depends on the parameters");
  if (!d.nonsplit_num.is_zero()) {
    MPoly res = d.residue_resultant;
    RatFunc lc(res.lead_coeff_in(d.z_var));
    std::vector<Rat> coeffs;
    for (const auto& c : res.coefficients(d.z_var)) {
      RatFunc cm = RatFunc(c) / lc;
      if (!cm.is_constant()) return finish("residue resultant does not lie in Q[z]");
      coeffs.push_back(cm.constant_value());
    }
    QPoly rq(coeffs);
    QPoly left = rq;
    std::vector<Int> residues;
    for (const Rat& root : rational_roots(rq)) {
      if (root.get_den() != 1 || sgn(root) < 0) return finish("residue " + to_string(root) + " is not a nonnegative integer");
      QPoly lin(std::vector<Rat>{-root, Rat(1)});
      while (left.degree() > 0 && (left % lin).is_zero()) left = div_exact(left, lin);
      residues.push_back(root.get_num());
    }
    if (left.degree() > 0) return finish("residue resultant has irrational residues");
    RatFunc sum;
    MPoly dd = d.nonsplit_den.derivative(kT);
    for (const Int& e : residues) {
      MPoly u = pp_in_t(mp_gcd(d.nonsplit_den, d.nonsplit_num - MPoly(Rat(e)) * dd));
      out.witnesses.log_parts.push_back({e, u});
      sum += RatFunc(MPoly(Rat(e)) * u.derivative(kT), u);
    }
    if (sum != d.nonsplit()) return finish("logarithmic parts do not reconstruct the nonsplit part");
  }
  out.separable = true;
  return finish("all four conditions hold");
}

// ---------------------------------------------------------------------------
// Telescopers

namespace {

Verdict telescoper_from(const ReductionResult& red, OpKind kind) {
  Verdict out;
  RatFunc rem = red.remainder();
  if (rem.is_zero()) {
    out.separable = true;
    out.certificate = OrePoly::constant(kind, QFrac(1));
    out.diagnostics = "reduction remainder is zero";
  } else {
    out = rational_separable(rem, kind);
    out.diagnostics = out.separable ? "reduction remainder is separable" : "reduction remainder is not separable";
  }
  out.witnesses.reduction = red;
  return out;
}

}  // namespace

Verdict telescoper_exists_st_dx(const RatFunc& f) {
  return telescoper_from(hermite_reduce(f, single_param(f)), OpKind::Shift);
}

Verdict telescoper_exists_dt_sx(const RatFunc& f) {
  return telescoper_from(abramov_reduce(f, single_param(f)), OpKind::Derivation);
}

// ---------------------------------------------------------------------------
// Oracle

std::optional<OrePoly> brute_force_annihilator(const std::vector<RatFunc>& coords, OpKind kind, int max_order,
                                               int max_degree, const std::optional<Matrix<RatFunc>>& action) {
  const std::size_t n = coords.size();
  if (n == 0 || max_order < 0 || max_degree < 0) return std::nullopt;
  Matrix<RatFunc> act = action ? *action : (kind == OpKind::Shift ? Matrix<RatFunc>::identity(n) : Matrix<RatFunc>(n, n));
  if (act.rows() != n || act.cols() != n) throw std::invalid_argument("action matrix has the wrong size");

  // iter[i][k]: coordinate k of op^i applied to the function.
  std::vector<std::vector<RatFunc>> iter{coords};
  for (int i = 1; i <= max_order; ++i) {
    const auto& prev = iter.back();
    std::vector<RatFunc> next(n);
    for (std::size_t l = 0; l < n; ++l) {
      RatFunc s = kind == OpKind::Derivation ? prev[l].derivative(kT) : RatFunc();
      for (std::size_t k = 0; k < n; ++k) {
        if (act(k, l).is_zero()) continue;
        s += (kind == OpKind::Derivation ? prev[k] : prev[k].shift(kT, Rat(1))) * act(k, l);
      }
      next[l] = s;
    }
    iter.push_back(std::move(next));
  }

  // Numerators over a common denominator per coordinate.
  std::vector<std::vector<MPoly>> nums(static_cast<std::size_t>(max_order + 1), std::vector<MPoly>(n));
  for (std::size_t k = 0; k < n; ++k) {
    MPoly den(1);
    for (const auto& it : iter) den = mp_lcm(den, it[k].den());
    for (int i = 0; i <= max_order; ++i) nums[i][k] = iter[i][k].num() * divide_exact(den, iter[i][k].den());
  }

  // Column (i, j) holds the coefficients of t^j * op^i(f), indexed by (k, monomial).
  auto column = [&](int i, int j) {
    std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, Rat> col;
    Monomial tj = Monomial::var(kT, static_cast<unsigned>(j));
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& term : nums[i][k].terms()) {
        Monomial mm = term.mono * tj;
        col[{k, std::vector<std::uint16_t>(mm.exp.begin(), mm.exp.end())}] = term.coeff;
      }
    return col;
  };

  auto kernel = [&](int order, int degree) {
    std::vector<std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, Rat>> cols;
    std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, std::size_t> rows;
    for (int i = 0; i <= order; ++i)
      for (int j = 0; j <= degree; ++j) {
        cols.push_back(column(i, j));
        for (const auto& [key, c] : cols.back()) rows.emplace(key, rows.size());
      }
    Matrix<Rat> m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [key, val] : cols[c]) m(rows[key], c) = val;
    return nullspace(m);
  };

  for (int order = 0; order <= max_order; ++order) {
    if (kernel(order, max_degree).empty()) continue;
    for (int degree = 0; degree <= max_degree; ++degree) {
      auto ker = kernel(order, degree);
      if (ker.empty()) continue;
      const auto& v = ker.front();
      std::vector<QFrac> c;
      for (int i = 0; i <= order; ++i) {
        std::vector<Rat> cc(v.begin() + i * (degree + 1), v.begin() + (i + 1) * (degree + 1));
        c.emplace_back(QPoly(cc));
      }
      return OrePoly(kind, std::move(c));
    }
  }
  return std::nullopt;
}

}  // namespace septel
