#include "septel/pfrac.hpp"

#include <stdexcept>

namespace septel {

RPoly to_rpoly(const MPoly& p, VarId v) {
  std::vector<RatFunc> c;
  for (auto& x : p.coefficients(v)) c.emplace_back(std::move(x));
  return RPoly(std::move(c));
}

RPoly to_rpoly(const RatFunc& f, VarId v) {
  if (f.den().depends_on(v)) throw std::invalid_argument("denominator depends on the main variable");
  RPoly r = to_rpoly(f.num(), v);
  if (f.den().is_one()) return r;
  return r.scaled(RatFunc(MPoly(1), f.den()));
}

MPoly clear_denominators(const RPoly& p, VarId v) {
  MPoly l(1);
  for (const auto& c : p.coeffs())
    if (!c.den().is_constant()) l = mp_lcm(l, c.den());
  std::vector<MPoly> cs;
  for (const auto& c : p.coeffs()) cs.push_back(c.num() * divide_exact(l, c.den()));
  return MPoly::from_coefficients(v, cs);
}

RatFunc from_rpoly(const RPoly& p, VarId v) {
  MPoly l(1);
  for (const auto& c : p.coeffs())
    if (!c.den().is_constant()) l = mp_lcm(l, c.den());
  std::vector<MPoly> cs;
  for (const auto& c : p.coeffs()) cs.push_back(c.num() * divide_exact(l, c.den()));
  return RatFunc(MPoly::from_coefficients(v, cs), l);
}

RatFunc PartialFraction::recombine() const {
  RatFunc r = from_rpoly(polypart, var);
  for (const auto& p : parts) r += p.numerator / RatFunc(p.factor.pow(static_cast<unsigned>(p.power)));
  return r;
}

PartialFraction partial_fractions(const RatFunc& f, VarId v, const std::vector<FactorPower>& factors) {
  PartialFraction out;
  out.var = v;
  MPoly prod(1);
  for (const auto& fp : factors) {
    if (fp.power < 1 || fp.factor.degree(v) < 1) throw std::invalid_argument("factor must have positive degree and power");
    prod *= fp.factor.pow(static_cast<unsigned>(fp.power));
  }
  auto rest = exact_divide(f.den(), prod);
  if (!rest || rest->depends_on(v)) throw std::invalid_argument("factor list does not multiply to the denominator");
  RatFunc scale = RatFunc(MPoly(1), *rest);

  RPoly num = to_rpoly(f.num(), v).scaled(scale);
  RPoly den = to_rpoly(prod, v);
  auto [q, r] = divrem(num, den);
  out.polypart = q;
  if (r.is_zero()) return out;

  for (std::size_t i = 0; i < factors.size(); ++i) {
    const MPoly& fi = factors[i].factor;
    RPoly fr = to_rpoly(fi, v);
    RPoly pi = fr.pow(static_cast<unsigned>(factors[i].power));
    RPoly cof = div_exact(den, pi);
    // A_i = r * cof^{-1} mod pi
    auto [g, s, t] = xgcd(cof, pi);
    if (g.degree() != 0) throw std::invalid_argument("factors are not pairwise coprime");
    RPoly ai = (r * s) % pi;
    // fi-adic expansion: ai = sum_j c_j fi^j.
    for (int j = 0; !ai.is_zero(); ++j) {
      auto [qq, c] = divrem(ai, fr);
      if (!c.is_zero()) out.parts.push_back({fi, factors[i].power - j, from_rpoly(c, v)});
      ai = qq;
    }
  }
  return out;
}

PartialFraction partial_fractions(const RatFunc& f, VarId v, const SqfreeDecomp& den) {
  std::vector<FactorPower> fs;
  for (const auto& p : den.parts) fs.push_back({p.factor, p.multiplicity});
  return partial_fractions(f, v, fs);
}

}  // namespace septel
