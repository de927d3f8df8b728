#pragma once

// Skew polynomials in one operator over Q(t): D (D a = a D + a') or
// S (S a = a(t+1) S).

#include <string>
#include <vector>

#include "septel/ratfunc.hpp"
#include "septel/upoly.hpp"

namespace septel {

class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(OpKind kind, std::vector<QFrac> coeffs);
  /// The operator D or S itself.
  static OrePoly generator(OpKind kind);
  static OrePoly constant(OpKind kind, QFrac c);

  OpKind kind() const { return kind_; }
  const std::vector<QFrac>& coeffs() const { return c_; }
  QFrac coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : QFrac(); }
  /// Order; -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const QFrac& lc() const { return c_.back(); }

  OrePoly monic() const;
  OrePoly operator-() const;
  friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }
  /// Left multiplication by a coefficient.
  friend OrePoly operator*(const QFrac& c, const OrePoly& a);
  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.kind_ == b.kind_ && a.c_ == b.c_; }

 private:
  void trim();
  OpKind kind_ = OpKind::Derivation;
  std::vector<QFrac> c_;
};

/// sigma(f) = f(t+1) or delta(f) = f' on Q(t).
QFrac twist(const QFrac& f, OpKind kind);

OrePoly ore_mul(const OrePoly& a, const OrePoly& b);
/// L(f) for f in Q(t, params).
RatFunc ore_apply(const OrePoly& l, const RatFunc& f);
struct OreDivRem {
  OrePoly q, r;
};
/// a = q b + r with order(r) < order(b).
OreDivRem ore_rdivrem(const OrePoly& a, const OrePoly& b);
/// Monic greatest common right divisor.
OrePoly ore_gcrd(const OrePoly& a, const OrePoly& b);
/// Monic least common left multiple.
OrePoly ore_lclm(const std::vector<OrePoly>& ops);

QFrac to_qfrac(const RatFunc& f);
RatFunc to_ratfunc(const QFrac& f);

/// Integer-coefficient form with denominators cleared, e.g. "(t+1)*S - t".
std::string to_string(const OrePoly& l);
/// Parses an operator in t and D or S. Parameters or the wrong operator
/// symbol are rejected with std::invalid_argument.
OrePoly parse_ore(const std::string& text, OpKind kind);

}  // namespace septel
