#pragma once

// Arithmetic in Q(t, params)[z]/<m(z)> for m monic in z with coefficients in
// Q[params]. With no tower this is plain Q(t, params).

#include <memory>
#include <stdexcept>
#include <vector>

#include "septel/pfrac.hpp"

namespace septel {

struct Tower {
  VarId z;
  MPoly modulus;  // monic in z
  RPoly mod_r;

  Tower(VarId z, MPoly modulus);
  int degree() const { return mod_r.degree(); }
};

/// A failed inversion: the modulus has the nontrivial factor `factor`.
class ZeroDivisor : public std::runtime_error {
 public:
  ZeroDivisor(const std::string& what, RPoly factor) : std::runtime_error(what), factor_(std::move(factor)) {}
  const RPoly& factor() const { return factor_; }

 private:
  RPoly factor_;
};

using TowerPtr = std::shared_ptr<const Tower>;

class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
  AlgElem(RatFunc v, TowerPtr k = nullptr);

  const RatFunc& value() const { return v_; }
  const TowerPtr& tower() const { return k_; }
  bool is_zero() const { return v_.is_zero(); }
  /// Coordinates over the power basis 1, z, ..., z^(k-1).
  std::vector<RatFunc> coords() const;

  AlgElem operator-() const { return AlgElem(-v_, k_, true); }
  friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator/(const AlgElem& a, const AlgElem& b) { return a * b.inverse(); }
  AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
  AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
  AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.v_ == b.v_; }

  AlgElem inverse() const;
  AlgElem pow(unsigned e) const;
  /// Derivative in a variable other than z.
  AlgElem derivative(VarId v) const { return AlgElem(v_.derivative(v), k_, true); }
  AlgElem shift(VarId v, const Rat& s) const { return AlgElem(v_.shift(v, s), k_, true); }
  AlgElem evaluate(VarId v, const Rat& x) const { return AlgElem(v_.evaluate(v, x), k_); }
  /// Coefficient of v^d in an element polynomial in v.
  AlgElem coeff_in(VarId v, int d) const;
  int degree_in(VarId v) const { return v_.num().degree(v); }

 private:
  AlgElem(RatFunc v, TowerPtr k, bool /*reduced*/) : v_(std::move(v)), k_(std::move(k)) {}
  RatFunc v_;
  TowerPtr k_;
};

inline bool is_zero(const AlgElem& a) { return a.is_zero(); }

}  // namespace septel
