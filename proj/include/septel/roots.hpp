#pragma once

// Exact integer and rational roots of univariate rational polynomials.

#include <vector>

#include "septel/upoly.hpp"

namespace septel {

/// Distinct integer roots, ascending. The zero polynomial has no roots here.
std::vector<Int> integer_roots(const QPoly& p);
/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace septel
