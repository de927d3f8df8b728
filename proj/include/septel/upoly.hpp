#pragma once

// Dense univariate polynomials and their fractions over an exact field F.
//
// F must be constructible from a small integer, support + - * / and ==, and
// have an `is_zero(const F&)` overload visible by ordinary or argument
// dependent lookup.

#include <cassert>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "septel/mpoly.hpp"

namespace septel {

namespace detail {
template <class F>
bool field_is_zero(const F& f) {
  return is_zero(f);
}
}  // namespace detail

template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(F c) {
    if (!detail::field_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x(unsigned power = 1) {
    std::vector<F> c(power + 1, F(0));
    c[power] = F(1);
    return UPoly(std::move(c));
  }
  static UPoly monomial(F coeff, unsigned power) {
    std::vector<F> c(power + 1, F(0));
    c[power] = std::move(coeff);
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
  const F& lc() const {
    assert(!c_.empty());
    return c_.back();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::field_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator*(const F& s, const UPoly& a) { return a.scaled(s); }
  friend UPoly operator*(const UPoly& a, const F& s) { return a.scaled(s); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(const F& s) const {
    if (detail::field_is_zero(s)) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / lc());
  }
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(r));
  }
  F eval(const F& x) const {
    F r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  /// p(x + s).
  UPoly shift(const F& s) const {
    UPoly r;
    UPoly lin(std::vector<F>{s, F(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UPoly(*it);
    return r;
  }
  /// p(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + UPoly(*it);
    return r;
  }
  UPoly pow(unsigned e) const {
    UPoly r(F(1)), b = *this;
    while (e) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::field_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;  // low to high degree
};

template <class F>
bool is_zero(const UPoly<F>& p) {
  return p.is_zero();
}

template <class F>
std::pair<UPoly<F>, UPoly<F>> divrem(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<F>(), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(a.degree() - b.degree() + 1, F(0));
  const F inv = F(1) / b.lc();
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    if (detail::field_is_zero(r[d])) continue;
    F c = r[d] * inv;
    for (int j = 0; j <= db; ++j) r[d - db + j] = r[d - db + j] - c * b.coeffs()[j];
    q[d - db] = std::move(c);
  }
  r.resize(db);
  return {UPoly<F>(std::move(q)), UPoly<F>(std::move(r))};
}

template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) {
  return divrem(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Solves s*a + t*b = c with deg s < deg b, assuming gcd(a, b) divides c.
template <class F>
std::pair<UPoly<F>, UPoly<F>> solve_bezout(const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& c) {
  auto [g, s0, t0] = xgcd(a, b);
  auto [cq, cr] = divrem(c, g);
  if (!cr.is_zero()) throw std::domain_error("bezout right-hand side not divisible by gcd");
  UPoly<F> s = s0 * cq;
  if (b.degree() > 0) s = divrem(s, b).second;
  auto [t, rest] = divrem(c - s * a, b);
  if (!rest.is_zero()) throw std::logic_error("bezout solve failed");
  return {s, t};
}

/// Exact quotient; throws if b does not divide a.
template <class F>
UPoly<F> div_exact(const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Element of F(x): num/den with gcd 1 and den monic.
template <class F>
class UFrac {
 public:
  UFrac() : den_(F(1)) {}
  UFrac(long c) : num_(F(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  explicit UFrac(F c) : num_(std::move(c)), den_(F(1)) {}
  explicit UFrac(UPoly<F> num) : num_(std::move(num)), den_(F(1)) {}
  UFrac(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static UFrac x() { return UFrac(UPoly<F>::x()); }

  const UPoly<F>& num() const { return num_; }
  const UPoly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  UFrac operator-() const {
    UFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend UFrac operator+(const UFrac& a, const UFrac& b) {
    if (a.den_ == b.den_) return UFrac(a.num_ + b.num_, a.den_);
    return UFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend UFrac operator-(const UFrac& a, const UFrac& b) { return a + (-b); }
  friend UFrac operator*(const UFrac& a, const UFrac& b) {
    if (a.is_zero() || b.is_zero()) return UFrac();
    return UFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend UFrac operator/(const UFrac& a, const UFrac& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return UFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  UFrac& operator+=(const UFrac& o) { return *this = *this + o; }
  UFrac& operator-=(const UFrac& o) { return *this = *this - o; }
  UFrac& operator*=(const UFrac& o) { return *this = *this * o; }
  friend bool operator==(const UFrac& a, const UFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  UFrac derivative() const {
    return UFrac(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }
  /// f(x + s).
  UFrac shift(const F& s) const { return UFrac(num_.shift(s), den_.shift(s)); }
  UFrac pow(int e) const {
    if (e < 0) return UFrac(F(1)) / pow(-e);
    return UFrac(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<F>(F(1));
      return;
    }
    UPoly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    F inv = F(1) / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  UPoly<F> num_;
  UPoly<F> den_;
};

template <class F>
bool is_zero(const UFrac<F>& f) {
  return f.is_zero();
}

using QPoly = UPoly<Rat>;
using QFrac = UFrac<Rat>;

/// Conversions between univariate MPoly in v and dense Q[v].
QPoly to_qpoly(const MPoly& p, VarId v);
MPoly from_qpoly(const QPoly& p, VarId v);

}  // namespace septel
