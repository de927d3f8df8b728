#pragma once

// Univariate views of rational functions (one main variable, coefficients in
// the field of the other variables) and partial fraction decomposition.

#include <utility>
#include <vector>

#include "septel/ratfunc.hpp"
#include "septel/upoly.hpp"

namespace septel {

using RPoly = UPoly<RatFunc>;

RPoly to_rpoly(const MPoly& p, VarId v);
/// Requires the denominator of f to be free of v.
RPoly to_rpoly(const RatFunc& f, VarId v);
RatFunc from_rpoly(const RPoly& p, VarId v);
/// Multiplies by the lcm of coefficient denominators: the result is a
/// polynomial with the same roots in v.
MPoly clear_denominators(const RPoly& p, VarId v);

struct PartialFraction {
  VarId var = kT;
  RPoly polypart;
  struct Part {
    MPoly factor;
    int power;
    RatFunc numerator;  // degree in var below that of factor
  };
  std::vector<Part> parts;

  RatFunc recombine() const;
};

struct FactorPower {
  MPoly factor;
  int power;
};

/// Decomposes f over pairwise coprime factors whose product with the given
/// powers equals den(f) up to a factor free of v. Zero numerators are dropped.
PartialFraction partial_fractions(const RatFunc& f, VarId v, const std::vector<FactorPower>& factors);
PartialFraction partial_fractions(const RatFunc& f, VarId v, const SqfreeDecomp& den);

}  // namespace septel
