#include "doctest.h"
#include "septel/algebraic.hpp"
#include "support.hpp"

using namespace septel;
using namespace septel::testing;

namespace {

const VarNames kNames = make_names({"x", "Y"});
constexpr VarId kY = 2;

AlgebraicInput A(const std::string& s) { return {parse_poly(s, kNames), kY}; }
AlgElem E(const std::string& s) { return AlgElem(parse_ratfunc(s, kNames)); }

Matrix<AlgElem> M2(const char* a, const char* b, const char* c, const char* d) {
  Matrix<AlgElem> m(2, 2);
  m(0, 0) = E(a);
  m(0, 1) = E(b);
  m(1, 0) = E(c);
  m(1, 1) = E(d);
  return m;
}

Matrix<AlgElem> deriv(Matrix<AlgElem> m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).derivative(kT);
  return m;
}

const char* kExample = "Y^2 - 2*(x*t+1)*Y + (x*t+1)^2 - t";

}  // namespace

TEST_CASE("search order and monic form") {
  CHECK(search_value(0) == 0);
  CHECK(search_value(1) == 1);
  CHECK(search_value(2) == -1);
  CHECK(search_value(5) == 3);
  CHECK(monicize(A("t*Y^2 - 1")).poly == parse_poly("Y^2 - t", kNames));
  CHECK(monicize(A("x*Y^2 - t")).poly == parse_poly("Y^2 - x*t", kNames));
  CHECK(monicize(A("2*Y^3 + Y + t")).poly == parse_poly("Y^3 + 2*Y + 4*t", kNames));
  CHECK(A("x*Y^2 + t").params() == std::vector<VarId>{kX});
}

TEST_CASE("simple points") {
  auto ex = find_simple_point(A(kExample));
  CHECK(ex.a == 1);
  CHECK_FALSE(ex.tower);
  CHECK(ex.alpha == E("x"));

  auto sq = find_simple_point(A("Y^2 - (t+x)"));
  CHECK(sq.a == 0);
  REQUIRE(sq.tower);
  CHECK(sq.tower->modulus == MPoly::var(sq.z, 2) - MPoly::var(kX));

  AlgebraicOptions forced;
  forced.simple_a = Rat(1);
  auto f = find_simple_point(A("Y^2 - (t+x)"), forced);
  REQUIRE(f.tower);
  CHECK(f.tower->modulus == MPoly::var(f.z, 2) - MPoly::var(kX) - MPoly(1));
}

TEST_CASE("factor through the simple point") {
  auto in = A("(Y - t*x)*(Y - t - x)");
  auto sp = find_simple_point(in);
  KPoly f = factor_at_point(in, sp);
  REQUIRE(f.degree() == 1);
  // the factor vanishes at (a, alpha)
  CHECK((f.coeffs()[0].evaluate(kT, sp.a) + sp.alpha).is_zero());
  AlgElem r = -f.coeffs()[0];
  CHECK((r == E("t*x") || r == E("t+x")));

  auto ex = A(kExample);
  CHECK(factor_at_point(ex, find_simple_point(ex)) == to_kpoly(ex, nullptr));

  // linear factor over Q(sqrt(x))(t): Y^2 - x t^2 = (Y - z t)(Y + z t)
  auto sq = A("Y^2 - x*t^2 - 2*x*t - x");
  AlgebraicOptions o;
  o.simple_a = Rat(0);
  auto sps = find_simple_point(sq, o);
  REQUIRE(sps.tower);
  KPoly g = factor_at_point(sq, sps, o);
  CHECK(g.degree() == 1);
}

TEST_CASE("associated systems and discriminants") {
  auto ex = A(kExample);
  KPoly p = to_kpoly(ex, nullptr);
  CHECK(associated_ode(p) == M2("0", "0", "x/2 - 1/(2*t)", "1/(2*t)"));
  CHECK(normalize(basis_discriminant(p, nullptr)) == normalize(P("t")));

  // y = sqrt(t + x) over Q(sqrt(x)): 4 * 4 trace form
  auto sq = A("Y^2 - (t+x)");
  auto sp = find_simple_point(sq);
  KPoly pb = factor_at_point(sq, sp);
  CHECK(pb.degree() == 2);
  CHECK(basis_discriminant(pb, sp.tower) == parse_poly("256*x^2*(t+x)^2", kNames));
}

TEST_CASE("polynomial solutions of the matrix system") {
  Matrix<AlgElem> a = M2("0", "0", "0", "1/t");
  auto id = poly_solutions_matrix_ode(a, a, MPoly(1), 3);
  REQUIRE(id.basis.size() == 3);  // constant diagonal, lower-left multiple of t
  for (const auto& z : id.basis) CHECK(deriv(z) == a * z - z * a);

  Matrix<AlgElem> s(1, 1);
  s(0, 0) = E("1/t");
  auto sc = poly_solutions_matrix_ode(s, Matrix<AlgElem>(1, 1), MPoly(1), 4);
  REQUIRE(sc.basis.size() == 1);
  CHECK(sc.basis[0](0, 0) * E("1/t") == sc.basis[0](0, 0).derivative(kT) * E("1"));
  CHECK(sc.basis[0](0, 0).degree_in(kT) == 1);

  CHECK(laplace_det(M2("t", "0", "x*t^2+t", "0")).is_zero());
  CHECK(laplace_det(M2("1", "2", "3", "4")) == AlgElem(-2));
}

TEST_CASE("worked example end to end") {
  auto r = decide_algebraic_separable(A(kExample));
  const auto& w = r.witness;
  CHECK(r.verdict.separable);
  CHECK_FALSE(r.bound_relative);
  CHECK(w.point->a == 1);
  CHECK(w.point->alpha == E("x"));
  CHECK(w.ell == 2);
  CHECK(w.spec->c == std::vector<Rat>{Rat(0)});
  CHECK(w.spec->b == 0);
  CHECK(*w.qbeta == to_kpoly(A("Y^2 - 2*Y + 1 - t"), nullptr));
  CHECK(normalize(w.q) == normalize(P("t")));
  CHECK(*w.a == M2("0", "0", "x/2 - 1/(2*t)", "1/(2*t)"));
  CHECK(*w.b == M2("0", "0", "-1/(2*t)", "1/(2*t)"));
  REQUIRE(w.solutions->basis.size() == 2);
  CHECK(w.conjugation_verified);

  // The published basis solves the system and spans the computed one.
  Matrix<AlgElem> m = *w.b;
  for (int i = 0; i < 2; ++i) m(i, i) = m(i, i) - E("1/t");
  Matrix<AlgElem> q1 = M2("t", "0", "x*t^2+t", "0"), q2 = M2("0", "0", "-t", "t");
  for (const auto& q : {q1, q2}) CHECK(deriv(q) == *w.a * q - q * m);
  for (const auto& z : w.solutions->basis) {
    // z = c1 q1 + c2 q2 with c1 = z(0,0)/t, c2 = z(1,1)/t
    AlgElem c1 = z(0, 0) / E("t"), c2 = z(1, 1) / E("t");
    CHECK(z == q1.scaled(c1) + q2.scaled(c2));
  }
  REQUIRE(w.det_form);
  CHECK(w.det_form->degree_in(kT) == 2);
  AlgElem at = *w.det_form;
  for (VarId v : w.symbols) at = at.evaluate(v, Rat(1));
  CHECK(at.degree_in(kT) == 2);
}

TEST_CASE("square root of t + x is not separable") {
  auto r = decide_algebraic_separable(A("Y^2 - (t+x)"));
  CHECK_FALSE(r.verdict.separable);
  CHECK(r.bound_relative);
  CHECK(r.witness.disc_base == parse_poly("256*x^2*(t+x)^2", kNames));
  CHECK(r.witness.spec->c == std::vector<Rat>{Rat(1)});
  CHECK(r.witness.spec->b == 1);
  CHECK(*r.witness.qbeta == to_kpoly(A("Y^2 - t - 1"), nullptr));
}

TEST_CASE("degenerate and delegated cases") {
  CHECK_THROWS_AS(decide_algebraic_separable(A("t + x")), std::invalid_argument);
  CHECK_THROWS_AS(decide_algebraic_separable(A("(Y - t)^2")), std::invalid_argument);

  auto lin = decide_algebraic_separable(A("(t+x)*Y - 1"));
  CHECK_FALSE(lin.verdict.separable);
  auto lin2 = decide_algebraic_separable(A("t*x*Y - 1"));
  CHECK(lin2.verdict.separable);

  auto nonsplit = decide_algebraic_separable(A("(t+x)*Y^2 - 1"));
  CHECK_FALSE(nonsplit.verdict.separable);
  CHECK_FALSE(nonsplit.witness.lead_split);

  // reducible input: the chosen root is rational in t over K
  auto rat = decide_algebraic_separable(A("(Y - t - x)*(Y + t)"));
  CHECK(rat.witness.ell == 1);
  CHECK(rat.verdict.separable);
  REQUIRE(rat.verdict.certificate);

  // sqrt(t) * (x + 1) generates Q(sqrt t) over K, so it is separable
  auto sep = decide_algebraic_separable(A("Y^2 - t*(x+1)^2"));
  CHECK(sep.verdict.separable);
}
