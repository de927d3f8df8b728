#pragma once

// Shared helpers for the test binaries.

#include <random>
#include <string>

#include "septel/linalg.hpp"
#include "septel/parse.hpp"
#include "septel/ratfunc.hpp"

namespace septel::testing {

inline MPoly P(const std::string& s) { return parse_poly(s); }
inline RatFunc R(const std::string& s) { return parse_ratfunc(s); }

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return range(0, 1) == 1; }
  /// Random polynomial in t and x with degrees bounded per variable.
  MPoly poly(int dt, int dx, long coeff = 5, int density = 2) {
    MPoly r;
    for (int i = 0; i <= dt; ++i)
      for (int j = 0; j <= dx; ++j) {
        if (range(0, density) != 0) continue;
        r += MPoly::monomial(Monomial::var(kT, i) * Monomial::var(kX, j), Rat(range(-coeff, coeff)));
      }
    return r;
  }
  MPoly nonzero_poly(int dt, int dx, long coeff = 5) {
    for (;;) {
      MPoly p = poly(dt, dx, coeff);
      if (!p.is_zero()) return p;
    }
  }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// Sylvester-matrix resultant, used as an independent oracle.
inline RatFunc sylvester_resultant(const MPoly& a, const MPoly& b, VarId v) {
  auto ca = a.coefficients(v), cb = b.coefficients(v);
  int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
  Matrix<RatFunc> s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = RatFunc(ca[m - j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = RatFunc(cb[n - j]);
  return determinant(s);
}

}  // namespace septel::testing
