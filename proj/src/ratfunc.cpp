#include "septel/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace septel {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = mp_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rat inv = 1 / den_.leading_coeff();
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() || b.den_.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  MPoly g = mp_gcd(a.den_, b.den_);
  if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  MPoly ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_ * Rat(1 / (a.den_.constant_value() * b.den_.constant_value()));
    return r;
  }
  MPoly g1 = mp_gcd(a.num_, b.den_), g2 = mp_gcd(b.num_, a.den_);
  MPoly n = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  MPoly d = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  RatFunc r;
  Rat inv = 1 / d.leading_coeff();
  r.num_ = n * inv;
  r.den_ = d * inv;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  RatFunc r;
  Rat inv = 1 / num_.leading_coeff();
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc RatFunc::derivative(VarId v) const {
  if (!depends_on(v)) return RatFunc();
  if (is_polynomial()) {
    RatFunc r;
    r.num_ = num_.derivative(v);
    return r;
  }
  return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFunc RatFunc::shift(VarId v, const Rat& amount) const {
  RatFunc r;
  r.num_ = num_.shift(v, amount);
  r.den_ = den_.shift(v, amount);
  // Shifting keeps coprimality and the leading coefficient.
  return r;
}

RatFunc RatFunc::evaluate(VarId v, const Rat& value) const {
  MPoly d = den_.evaluate(v, value);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
  return RatFunc(num_.evaluate(v, value), d);
}

RatFunc RatFunc::substitute(VarId v, const RatFunc& value) const {
  auto subst = [&](const MPoly& p) {
    // Horner in v over rational functions.
    auto cs = p.coefficients(v);
    RatFunc r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + RatFunc(*it);
    return r;
  };
  if (!depends_on(v)) return *this;
  return subst(num_) / subst(den_);
}

RatFunc RatFunc::rename(const std::vector<VarId>& map) const { return RatFunc(num_.rename(map), den_.rename(map)); }

// ---------------------------------------------------------------------------
// Names and printing

VarNames::VarNames() : names_{"t", "x"} {}

const std::string& VarNames::operator[](VarId v) const {
  if (v >= 0 && v < static_cast<int>(names_.size()) && !names_[v].empty()) return names_[v];
  if (fallback_.size() < static_cast<std::size_t>(kMaxVars)) fallback_.resize(kMaxVars);
  if (fallback_[v].empty()) fallback_[v] = "v" + std::to_string(v);
  return fallback_[v];
}

void VarNames::set(VarId v, std::string name) {
  if (v >= static_cast<int>(names_.size())) names_.resize(v + 1);
  names_[v] = std::move(name);
}

VarId VarNames::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  return -1;
}

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

std::string monomial_string(const Monomial& m, const VarNames& names) {
  std::string s;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!m.exp[v]) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
  }
  return s;
}

// A denominator can be printed bare only if it is a single variable power.
bool needs_parens(const MPoly& p) {
  if (p.size() != 1 || p.leading_coeff() != 1) return true;
  VarSet s = p.support();
  return s == 0 || (s & (s - 1)) != 0;
}

}  // namespace

std::string to_string(const MPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string m = monomial_string(t.mono, names);
    if (m.empty()) {
      s += to_string(c);
    } else if (c == 1) {
      s += m;
    } else {
      s += to_string(c) + "*" + m;
    }
  }
  return s;
}

std::string to_string(const RatFunc& f, const VarNames& names) {
  if (f.is_polynomial()) {
    return to_string(f.num() * Rat(1 / f.den().constant_value()), names);
  }
  std::string n = to_string(f.num(), names);
  std::string d = to_string(f.den(), names);
  if (f.num().size() > 1) n = "(" + n + ")";
  if (needs_parens(f.den())) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace septel
