#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Variables are small integer ids. Id 0 is reserved for the distinguished
// variable t; everything else is a parameter or an auxiliary variable that a
// caller allocated. Terms are kept in a canonical graded-lexicographic order
// in which variable 0 is the most significant.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace septel {

using Rat = mpq_class;
using Int = mpz_class;
using VarId = int;

inline constexpr int kMaxVars = 16;
inline constexpr VarId kT = 0;

/// Bit set of variable ids.
using VarSet = std::uint32_t;

inline constexpr VarSet var_bit(VarId v) { return VarSet{1} << v; }
inline constexpr bool contains(VarSet s, VarId v) { return (s >> v) & 1U; }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t total = 0;

  static Monomial var(VarId v, unsigned power = 1);

  unsigned operator[](VarId v) const { return exp[v]; }
  bool is_one() const { return total == 0; }
  bool divides(const Monomial& other) const;
  VarSet support() const;

  Monomial operator*(const Monomial& other) const;
  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total degree first, then lexicographic with
/// variable 0 most significant.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  if (a.total != b.total) return a.total <=> b.total;
  return a.exp <=> b.exp;
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

Monomial gcd(const Monomial& a, const Monomial& b);

class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
  };

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)

  static MPoly var(VarId v, unsigned power = 1);
  static MPoly monomial(const Monomial& m, const Rat& c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && constant_value() == 1; }
  /// Value of a constant polynomial; zero for the zero polynomial.
  Rat constant_value() const;
  /// Coefficient of the constant monomial.
  Rat constant_term() const;

  const Rat& leading_coeff() const;
  const Monomial& leading_monomial() const;

  int degree(VarId v) const;  // -1 for zero
  int min_degree(VarId v) const;
  int total_degree() const;
  VarSet support() const;
  bool depends_on(VarId v) const { return contains(support(), v); }
  bool free_of(VarSet vars) const { return (support() & vars) == 0; }
  int max_var() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;
  MPoly mul_monomial(const Monomial& m) const;
  /// Precondition: m divides every term.
  MPoly div_monomial(const Monomial& m) const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;

  MPoly derivative(VarId v) const;
  /// Replace v by value.
  MPoly substitute(VarId v, const MPoly& value) const;
  /// Replace v by v + amount.
  MPoly shift(VarId v, const Rat& amount) const;
  MPoly evaluate(VarId v, const Rat& value) const;
  /// Map every variable id i to rename[i]; ids beyond the vector are kept.
  MPoly rename(const std::vector<VarId>& rename) const;

  /// Coefficients with respect to v: index i holds the coefficient of v^i.
  std::vector<MPoly> coefficients(VarId v) const;
  static MPoly from_coefficients(VarId v, const std::vector<MPoly>& coeffs);
  /// Leading coefficient with respect to v (a polynomial free of v).
  MPoly lead_coeff_in(VarId v) const;

  /// Positive rational c such that c * this has coprime integer coefficients.
  Rat integer_normalizer() const;

 private:
  std::vector<Term> terms_;  // strictly decreasing in the canonical order
};

/// Exact quotient a / b if b divides a in Q[vars], otherwise nullopt.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);
/// Scales so that the canonical leading coefficient is 1 (zero stays zero).
MPoly normalize(const MPoly& a);

/// Greatest common divisor with canonical leading coefficient 1.
/// gcd(0, 0) = 0.
MPoly mp_gcd(const MPoly& a, const MPoly& b);
MPoly mp_lcm(const MPoly& a, const MPoly& b);

/// Pseudo-remainder of a by b with respect to v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, VarId v);

/// Resultant with respect to v, computed by the subresultant PRS.
MPoly resultant(const MPoly& a, const MPoly& b, VarId v);
/// Res_v(a, da/dv); zero iff a has a repeated factor involving v.
MPoly discriminant(const MPoly& a, VarId v);

struct ContentPP {
  MPoly content;
  MPoly pp;
};

/// Views a as a polynomial in the variables outside `block` with coefficients
/// in Q[block]; the content is the normalized gcd of those coefficients.
ContentPP content_pp(const MPoly& a, VarSet block);
/// Content/primitive part of a as a polynomial in v.
ContentPP content_pp_in(const MPoly& a, VarId v);

struct SqfreeDecomp {
  /// Factor of the input free of the designated variable.
  MPoly coefficient{1};
  struct Part {
    MPoly factor;
    int multiplicity;
  };
  std::vector<Part> parts;

  MPoly expand() const;
};

/// Yun decomposition with respect to v.
SqfreeDecomp sqfree_decomp(const MPoly& a, VarId v);
/// Product of the distinct factors involving v.
MPoly squarefree_part(const MPoly& a, VarId v);

/// Smallest variable id not used by any of the polynomials, at least `floor`.
VarId fresh_var(std::initializer_list<const MPoly*> polys, VarId floor = 1);

}  // namespace septel
