#include "septel/reductions.hpp"

#include <map>
#include <stdexcept>

#include "septel/pfrac.hpp"
#include "septel/valdis.hpp"

namespace septel {

RatFunc delta(const RatFunc& f, VarId v) { return f.shift(v, Rat(1)) - f; }

RatFunc ReductionResult::recombine() const {
  RatFunc r = remainder();
  return r + (kind == OpKind::Derivation ? g.derivative(var) : delta(g, var));
}

namespace {

RPoly integrate(const RPoly& p) {
  std::vector<RatFunc> c(p.coeffs().size() + 1, RatFunc());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + 1] = p.coeffs()[i] * RatFunc(Rat(1, static_cast<long>(i + 1)));
  return RPoly(std::move(c));
}

/// G with G(v + 1) - G(v) = p.
RPoly indefinite_sum(RPoly p) {
  RPoly g;
  while (!p.is_zero()) {
    int n = p.degree();
    RPoly term = RPoly::monomial(p.lc() * RatFunc(Rat(1, n + 1)), static_cast<unsigned>(n + 1));
    g += term;
    p -= term.shift(RatFunc(1)) - term;
  }
  return g;
}

ReductionResult finish(RatFunc g, const RatFunc& rem, OpKind kind, VarId v) {
  ReductionResult out;
  out.g = std::move(g);
  out.rem_num = rem.num();
  out.rem_den = rem.den();
  out.kind = kind;
  out.var = v;
  return out;
}

}  // namespace

ReductionResult hermite_reduce(const RatFunc& f, VarId v) {
  RPoly a = to_rpoly(f.num(), v), d = to_rpoly(f.den(), v);
  auto [poly, proper] = divrem(a, d);
  RatFunc g = from_rpoly(integrate(poly), v);
  a = proper;
  if (a.is_zero()) return finish(g, RatFunc(), OpKind::Derivation, v);

  std::map<int, MPoly> levels;
  for (const auto& part : sqfree_decomp(f.den(), v).parts) levels[part.multiplicity] = part.factor;
  for (const auto& [i, factor] : levels) {
    if (i < 2) continue;
    RPoly vv = to_rpoly(factor, v);
    RPoly u = div_exact(d, vv.pow(static_cast<unsigned>(i)));
    RPoly uv = u * vv.derivative();
    RatFunc vr = from_rpoly(vv, v);
    for (int j = i - 1; j >= 1; --j) {
      auto [b, c] = solve_bezout(uv, vv, a.scaled(RatFunc(Rat(-1, j))));
      g += from_rpoly(b, v) / vr.pow(j);
      a = c.scaled(RatFunc(-j)) - u * b.derivative();
    }
    d = u * vv;
  }
  return finish(g, from_rpoly(a, v) / from_rpoly(d, v), OpKind::Derivation, v);
}

ReductionResult abramov_reduce(const RatFunc& f, VarId v) {
  RPoly a = to_rpoly(f.num(), v), d = to_rpoly(f.den(), v);
  auto [poly, proper] = divrem(a, d);
  RatFunc g = from_rpoly(indefinite_sum(poly), v);
  RatFunc rem = from_rpoly(proper, v) / RatFunc(f.den());
  while (!rem.is_zero()) {
    long k = dispersion(rem.den(), v).value;
    if (k == 0) break;
    MPoly b = content_pp_in(rem.den(), v).pp;
    MPoly h = content_pp_in(mp_gcd(b, b.shift(v, Rat(-k))), v).pp;
    // b1: the part of b built from factors of h.
    MPoly b1(1), rest = b;
    for (;;) {
      MPoly c = mp_gcd(rest, h);
      if (c.degree(v) < 1) break;
      b1 *= c;
      rest = divide_exact(rest, c);
    }
    RatFunc part;
    if (rest.degree(v) < 1) {
      part = rem;
    } else {
      auto pf = partial_fractions(rem, v, {{b1, 1}, {rest, 1}});
      for (const auto& p : pf.parts)
        if (p.factor == b1) part += p.numerator / RatFunc(b1);
    }
    g -= part;
    rem = rem - part + part.shift(v, Rat(1));
  }
  return finish(g, rem, OpKind::Shift, v);
}

}  // namespace septel
