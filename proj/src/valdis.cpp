#include "septel/valdis.hpp"

#include <algorithm>
#include <stdexcept>

#include "septel/roots.hpp"
#include "septel/upoly.hpp"

namespace septel {

namespace {

long multiplicity(MPoly a, const MPoly& p) {
  long m = 0;
  while (auto q = exact_divide(a, p)) {
    a = std::move(*q);
    ++m;
  }
  return m;
}

MPoly primitive_in(const MPoly& p, VarId v) {
  if (p.degree(v) < 1) throw std::invalid_argument("polynomial is constant in the variable");
  return content_pp_in(p, v).pp;
}

}  // namespace

// Common integer roots of Res_v(a(v), b(v + k)) specialized at two parameter
// points where the leading coefficients survive.
std::vector<Int> shift_candidates(const MPoly& a, const MPoly& b, VarId v) {
  VarSet params = (a.support() | b.support()) & ~var_bit(v);
  VarId k = fresh_var({&a, &b}, v + 1);
  MPoly la = a.lead_coeff_in(v), lb = b.lead_coeff_in(v);
  std::vector<Int> result;
  int found = 0;
  for (long m = 0; found < 2 && m < 64; ++m) {
    MPoly sa = a, sb = b, ca = la, cb = lb;
    for (VarId x = 0; x < kMaxVars; ++x) {
      if (!contains(params, x)) continue;
      Rat val(3 + 7 * m + 2 * x);
      sa = sa.evaluate(x, val);
      sb = sb.evaluate(x, val);
      ca = ca.evaluate(x, val);
      cb = cb.evaluate(x, val);
    }
    if (ca.is_zero() || cb.is_zero()) continue;
    MPoly r = resultant(sa, sb.substitute(v, MPoly::var(v) + MPoly::var(k)), v);
    if (r.is_zero()) throw std::logic_error("specialized resultant vanished identically");
    std::vector<Int> roots = r.degree(k) < 1 ? std::vector<Int>{} : integer_roots(to_qpoly(r, k));
    if (found == 0) {
      result = roots;
    } else {
      std::vector<Int> both;
      for (const auto& x : result)
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) both.push_back(x);
      result = both;
    }
    ++found;
    if (params == 0) break;
  }
  if (found == 0) throw std::runtime_error("no admissible specialization point for the dispersion resultant");
  return result;
}

OrderValue order_at(const RatFunc& f, const MPoly& p, VarId v) {
  MPoly pp = primitive_in(p, v);
  if (f.is_zero()) return OrderValue::inf();
  return {false, multiplicity(f.num(), pp) - multiplicity(f.den(), pp)};
}

DispersionValue dispersion(const MPoly& u, VarId v) {
  if (u.is_zero()) return DispersionValue::inf();
  if (u.degree(v) < 1) return {};
  MPoly s = squarefree_part(u, v);
  auto cands = shift_candidates(s, s, v);
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    if (*it <= 0) break;
    if (it->fits_slong_p() && mp_gcd(s, s.shift(v, Rat(*it))).degree(v) > 0) return {false, it->get_si()};
  }
  return {};
}

std::vector<long> orbit_shifts(const MPoly& u, const MPoly& p, VarId v) {
  MPoly pp = primitive_in(p, v);
  std::vector<long> out;
  if (u.is_zero() || u.degree(v) < pp.degree(v)) return out;
  for (const auto& r : shift_candidates(u, pp, v)) {
    if (!r.fits_slong_p()) continue;
    if (exact_divide(u, pp.shift(v, Rat(r)))) out.push_back(r.get_si());
  }
  return out;
}

DispersionValue local_dispersion(const MPoly& u, const MPoly& p, VarId v) {
  if (u.is_zero()) {
    primitive_in(p, v);
    return DispersionValue::inf();
  }
  auto ks = orbit_shifts(u, p, v);
  if (ks.empty()) return {};
  return {false, ks.back() - ks.front()};
}

}  // namespace septel
