#pragma once

// Hermite reduction (f = D_v g + rem) and Abramov reduction
// (f = Delta_v g + rem) with respect to one variable.

#include "septel/ratfunc.hpp"

namespace septel {

struct ReductionResult {
  RatFunc g;
  MPoly rem_num;
  MPoly rem_den{1};
  OpKind kind = OpKind::Derivation;
  VarId var = kT;

  RatFunc remainder() const { return RatFunc(rem_num, rem_den); }
  /// D_var(g) + rem, or Delta_var(g) + rem.
  RatFunc recombine() const;
};

ReductionResult hermite_reduce(const RatFunc& f, VarId v);
ReductionResult abramov_reduce(const RatFunc& f, VarId v);

/// Delta_v(f) = f(v + 1) - f(v).
RatFunc delta(const RatFunc& f, VarId v);

}  // namespace septel
