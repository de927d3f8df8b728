#include "septel/algfield.hpp"

namespace septel {

Tower::Tower(VarId zv, MPoly m) : z(zv), modulus(std::move(m)), mod_r(to_rpoly(modulus, zv)) {
  if (mod_r.degree() < 1) throw std::invalid_argument("extension modulus must have positive degree");
  if (!(mod_r.lc() == RatFunc(1))) throw std::invalid_argument("extension modulus must be monic");
}

namespace {

TowerPtr pick(const TowerPtr& a, const TowerPtr& b) { return a ? a : b; }

bool reduced(const RatFunc& v, const Tower& k) {
  return !v.den().depends_on(k.z) && v.num().degree(k.z) < k.degree();
}

}  // namespace

AlgElem::AlgElem(RatFunc v, TowerPtr k) : v_(std::move(v)), k_(std::move(k)) {
  if (!k_ || reduced(v_, *k_)) return;
  const Tower& t = *k_;
  RPoly num = to_rpoly(v_.num(), t.z);
  RPoly den = to_rpoly(v_.den(), t.z);
  if (den.degree() > 0) {
    auto [g, s, unused] = xgcd(den, t.mod_r);
    if (g.degree() > 0) throw ZeroDivisor("extension modulus is reducible", g);
    num = num * s;
  } else {
    num = num.scaled(RatFunc(1) / den.lc());
  }
  v_ = from_rpoly(num % t.mod_r, t.z);
}

std::vector<RatFunc> AlgElem::coords() const {
  if (!k_) return {v_};
  std::vector<RatFunc> out(static_cast<std::size_t>(k_->degree()));
  RatFunc inv_den = RatFunc(1) / RatFunc(v_.den());
  auto c = v_.num().coefficients(k_->z);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = RatFunc(c[i]) * inv_den;
  return out;
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) { return AlgElem(a.v_ + b.v_, pick(a.k_, b.k_), true); }

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  TowerPtr k = pick(a.k_, b.k_);
  RatFunc v = a.v_ * b.v_;
  if (!k || reduced(v, *k)) return AlgElem(std::move(v), k, true);
  return AlgElem(std::move(v), k);
}

AlgElem AlgElem::inverse() const {
  if (v_.is_zero()) throw std::domain_error("division by zero in the extension field");
  return AlgElem(v_.inverse(), k_);
}

AlgElem AlgElem::pow(unsigned e) const {
  AlgElem r(1), b = *this;
  r.k_ = k_;
  while (e) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

AlgElem AlgElem::coeff_in(VarId v, int d) const {
  if (v_.den().depends_on(v)) throw std::invalid_argument("element is not polynomial in the variable");
  auto c = v_.num().coefficients(v);
  if (d < 0 || d >= static_cast<int>(c.size())) return AlgElem(RatFunc(), k_, true);
  return AlgElem(RatFunc(c[d], v_.den()), k_, true);
}

}  // namespace septel
