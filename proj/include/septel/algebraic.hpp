#pragma once

// Separability in t of an algebraic function y given by its minimal
// polynomial P(t, params, Y): leading-coefficient test, monic form, simple
// point, factor through the point, specialization to beta in Q(t)-bar,
// associated systems, polynomial solutions of the matrix ODE and the
// determinant test.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "septel/algfield.hpp"
#include "septel/linalg.hpp"
#include "septel/separability.hpp"

namespace septel {

/// P as a polynomial in the variable y with coefficients in Q[t, params].
struct AlgebraicInput {
  MPoly poly;
  VarId y = 2;

  std::vector<MPoly> coeffs() const { return poly.coefficients(y); }
  int degree() const { return poly.degree(y); }
  /// Parameter ids in ascending order.
  std::vector<VarId> params() const;
};

/// Polynomial in Y over K(t).
using KPoly = UPoly<AlgElem>;

class UnsupportedFactorization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Irreducible factors of a polynomial over the coefficient field of its
/// entries, or nullopt when the engine cannot decide.
using FactorFn = std::function<std::optional<std::vector<KPoly>>(const KPoly&)>;

struct AlgebraicOptions {
  int budget = 50;
  std::optional<int> degree_bound;
  /// Forces the t-coordinate of the simple point.
  std::optional<Rat> simple_a;
  /// Consulted only where the built-in engine gives up.
  FactorFn factor;
};

/// Ytilde = A_n * Y; returns Ytilde^n + A_{n-1} Ytilde^(n-1) + A_{n-2} A_n Ytilde^(n-2) + ...
AlgebraicInput monicize(const AlgebraicInput& p);

struct SimplePoint {
  Rat a;
  TowerPtr tower;  // null when alpha lies in Q(params)
  AlgElem alpha;
  /// Minimal polynomial F(params, z) of alpha; z - alpha for the trivial tower.
  MPoly minpoly;
  VarId z = 0;
};

SimplePoint find_simple_point(const AlgebraicInput& monic, const AlgebraicOptions& opts = {});

KPoly to_kpoly(const AlgebraicInput& p, const TowerPtr& tower);
/// The factor of P over K(t) through (a, alpha), monic in Y.
KPoly factor_at_point(const AlgebraicInput& monic, const SimplePoint& sp, const AlgebraicOptions& opts = {});

/// Determinant of the trace form of the basis alpha^i y^j over Q(t, params).
MPoly basis_discriminant(const KPoly& pbar, const TowerPtr& tower);

struct SpecPoint {
  std::vector<Rat> c;  // one value per parameter
  Rat b;
};
SpecPoint spec_point(const KPoly& pbar, const SimplePoint& sp, const std::vector<VarId>& params, const MPoly& d,
                     const AlgebraicOptions& opts = {});
/// pbar at params = c, z = b, over Q(t).
KPoly specialize_beta(const KPoly& pbar, const SimplePoint& sp, const std::vector<VarId>& params,
                      const SpecPoint& pt);

/// Row j holds the coordinates of (y^j)' in the basis 1, y, ..., y^(l-1).
Matrix<AlgElem> associated_ode(const KPoly& minpoly);

struct PolySolBasis {
  std::vector<Matrix<AlgElem>> basis;
  int degree_bound_used = 0;
};
/// Polynomial Z with Z' = A Z - Z (B - (q'/q) I), entry degrees <= bound.
PolySolBasis poly_solutions_matrix_ode(const Matrix<AlgElem>& a, const Matrix<AlgElem>& b, const MPoly& q,
                                       std::optional<int> bound = std::nullopt);
int default_degree_bound(const Matrix<AlgElem>& a, const Matrix<AlgElem>& b, const MPoly& q);

/// Determinant by cofactor expansion (no divisions).
AlgElem laplace_det(const Matrix<AlgElem>& m);

struct AlgebraicWitness {
  bool lead_split = true;
  MPoly monic_poly;
  std::optional<SimplePoint> point;
  std::optional<KPoly> pbar;
  int ell = 0;
  MPoly disc_base;
  std::optional<SpecPoint> spec;
  std::optional<KPoly> qbeta;
  MPoly q;
  std::optional<Matrix<AlgElem>> a, b;
  std::optional<PolySolBasis> solutions;
  /// det(sum z_i Q_i) in the symbol variables below.
  std::optional<AlgElem> det_form;
  std::vector<VarId> symbols;
  std::vector<Rat> zstar;
  bool conjugation_verified = false;
};

struct AlgebraicResult {
  Verdict verdict;
  AlgebraicWitness witness;
  /// A "No" that depends on the degree bound for polynomial solutions.
  bool bound_relative = false;
};

AlgebraicResult decide_algebraic_separable(const AlgebraicInput& p, const AlgebraicOptions& opts = {});

/// 0, 1, -1, 2, -2, ...
Rat search_value(int k);

}  // namespace septel
