#pragma once

// Orders at irreducible polynomials, dispersion and local dispersion.

#include <string>
#include <vector>

#include "septel/ratfunc.hpp"

namespace septel {

/// Integer or +infinity.
struct ExtInt {
  bool infinite = false;
  long value = 0;

  static ExtInt inf() { return {true, 0}; }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

using OrderValue = ExtInt;
using DispersionValue = ExtInt;

/// Order of f at p, where p is irreducible over the field of the other
/// variables (not checked). Throws std::invalid_argument if p is free of v.
OrderValue order_at(const RatFunc& f, const MPoly& p, VarId v);

/// Integers k (ascending) for which a(v) and b(v + k) may share a factor.
/// A superset of the true shifts; confirm each with a gcd or division.
std::vector<Int> shift_candidates(const MPoly& a, const MPoly& b, VarId v);

/// max{k >= 0 : gcd(u, u(v + k)) nontrivial in v}.
DispersionValue dispersion(const MPoly& u, VarId v);

/// Integer shifts k with p(v + k) dividing u, ascending.
std::vector<long> orbit_shifts(const MPoly& u, const MPoly& p, VarId v);
/// Largest distance between shifts of p dividing u.
DispersionValue local_dispersion(const MPoly& u, const MPoly& p, VarId v);

}  // namespace septel
