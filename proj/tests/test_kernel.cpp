#include "doctest.h"
#include "septel/pfrac.hpp"
#include "septel/roots.hpp"
#include "support.hpp"

using namespace septel;
using namespace septel::testing;

TEST_CASE("gcd examples") {
  CHECK(mp_gcd(P("t^2-x^2"), P("t-x")) == P("t-x"));
  CHECK(mp_gcd(P("3*t^2+6*x"), MPoly()) == P("t^2+2*x"));
  CHECK(mp_gcd(MPoly(), MPoly()).is_zero());
  MPoly a = P("(t+x)^2*(t-1)"), b = P("(t+x)*(t+1)");
  MPoly g = mp_gcd(a, b);
  CHECK(g == P("t+x"));
  CHECK(exact_divide(a, g).has_value());
  CHECK(exact_divide(b, g).has_value());
}

TEST_CASE("gcd invariants on random inputs") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    MPoly c = rng.nonzero_poly(1, 1, 3);
    MPoly a = rng.nonzero_poly(2, 2) * c, b = rng.nonzero_poly(2, 2) * c;
    MPoly g = mp_gcd(a, b);
    auto qa = exact_divide(a, g), qb = exact_divide(b, g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(mp_gcd(*qa, *qb).is_one());
    CHECK(exact_divide(g, normalize(c)).has_value());
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("t-x"), P("t+x"), kT) == P("2*x"));
  // Roots of t^2+1 are i and -i; (4+4i)(4-4i) = 32.
  CHECK(resultant(P("t^2+1"), P("t^2+4*t+5"), kT) == MPoly(32));
  CHECK(resultant(P("(t+x)*(t^2-3)"), P("(t+x)*(x*t+1)"), kT).is_zero());
}

TEST_CASE("resultant agrees with Sylvester determinant and gcd degree") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    MPoly a = rng.poly(rng.range(1, 4), rng.range(0, 2));
    MPoly b = rng.poly(rng.range(1, 4), rng.range(0, 2));
    if (i % 4 == 0) {
      MPoly c = rng.nonzero_poly(1, 1);
      a *= c;
      b *= c;
    }
    if (a.degree(kT) < 1 || b.degree(kT) < 1) continue;
    MPoly r = resultant(a, b, kT);
    CHECK(RatFunc(r) == sylvester_resultant(a, b, kT));
    CHECK(r.is_zero() == (mp_gcd(a, b).degree(kT) > 0));
  }
}

TEST_CASE("squarefree decomposition") {
  auto d = sqfree_decomp(P("(t+x)^2*(t-1)"), kT);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].factor == P("t-1"));
  CHECK(d.parts[0].multiplicity == 1);
  CHECK(d.parts[1].factor == P("t+x"));
  CHECK(d.parts[1].multiplicity == 2);

  auto s = sqfree_decomp(P("t^2+x"), kT);
  REQUIRE(s.parts.size() == 1);
  CHECK(s.parts[0].factor == P("t^2+x"));

  auto c = sqfree_decomp(P("t^3"), kT);
  REQUIRE(c.parts.size() == 1);
  CHECK(c.parts[0].factor == P("t"));
  CHECK(c.parts[0].multiplicity == 3);

  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    MPoly a = rng.nonzero_poly(2, 1) * rng.nonzero_poly(1, 1).pow(2) * rng.nonzero_poly(1, 2).pow(3);
    auto dd = sqfree_decomp(a, kT);
    CHECK(dd.expand() == a);
    for (std::size_t k = 0; k < dd.parts.size(); ++k) {
      const MPoly& f = dd.parts[k].factor;
      CHECK(mp_gcd(f, f.derivative(kT)).degree(kT) == 0);
      if (k + 1 < dd.parts.size()) CHECK(mp_gcd(f, dd.parts[k + 1].factor).degree(kT) <= 0);
    }
  }
}

TEST_CASE("content and primitive part") {
  auto a = content_pp(P("(t^2+1)*(x+2)"), var_bit(kX));
  CHECK(a.content == P("x+2"));
  CHECK(a.pp == P("t^2+1"));
  auto b = content_pp(P("t+x"), var_bit(kX));
  CHECK(b.content.is_one());
  CHECK(b.pp == P("t+x"));
  auto c = content_pp(P("x*t+x^2"), var_bit(kX));
  CHECK(c.content == P("x"));
  CHECK(c.pp == P("t+x"));

  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    MPoly p = rng.nonzero_poly(2, 2) * rng.nonzero_poly(0, 2);
    auto cp = content_pp(p, var_bit(kX));
    CHECK(cp.content * cp.pp == p);
    CHECK(content_pp(cp.pp, var_bit(kX)).content.is_one());
  }
}

TEST_CASE("partial fractions") {
  RatFunc f = R("1/(t*(t+x))");
  auto pf = partial_fractions(f, kT, {{P("t"), 1}, {P("t+x"), 1}});
  REQUIRE(pf.parts.size() == 2);
  CHECK(pf.parts[0].numerator == R("1/x"));
  CHECK(pf.parts[1].numerator == R("-1/x"));
  CHECK(pf.recombine() == f);

  RatFunc g = R("(t+3)/(t^2+x)");
  auto pg = partial_fractions(g, kT, {{P("t^2+x"), 1}});
  REQUIRE(pg.parts.size() == 1);
  CHECK(pg.polypart.is_zero());
  CHECK(pg.parts[0].numerator == R("t+3"));

  RatFunc h = R("(t^2+1)/t");
  auto ph = partial_fractions(h, kT, {{P("t"), 1}});
  CHECK(from_rpoly(ph.polypart, kT) == R("t"));
  REQUIRE(ph.parts.size() == 1);
  CHECK(ph.parts[0].numerator == RatFunc(1));

  CHECK_THROWS_AS(partial_fractions(f, kT, {{P("t"), 1}}), std::invalid_argument);

  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    MPoly a = rng.nonzero_poly(1, 1), b = rng.nonzero_poly(2, 1);
    if (a.degree(kT) < 1 || b.degree(kT) < 1 || mp_gcd(a, b).degree(kT) > 0) continue;
    a = content_pp_in(a, kT).pp;
    b = content_pp_in(b, kT).pp;
    RatFunc r(rng.poly(4, 2), a.pow(2) * b);
    auto d = sqfree_decomp(r.den(), kT);
    auto pr = partial_fractions(r, kT, d);
    CHECK(pr.recombine() == r);
    for (const auto& part : pr.parts) CHECK(part.numerator.num().degree(kT) < part.factor.degree(kT));
  }
}

TEST_CASE("integer and rational roots") {
  QPoly p = to_qpoly(P("(t-3)*(t+7)^2*(2*t-1)*(t^2+1)"), kT);
  auto r = integer_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -7);
  CHECK(r[1] == 3);
  auto q = rational_roots(p);
  REQUIRE(q.size() == 3);
  CHECK(q[1] == Rat(1, 2));
  CHECK(integer_roots(to_qpoly(P("t*(t-100000)*(t+123456789)"), kT)).size() == 3);
  CHECK(integer_roots(to_qpoly(P("t^2-2"), kT)).empty());
}

TEST_CASE("printing round trips through the parser") {
  for (const char* s : {"1/(t+x)", "(t^2+1)*(x+2)", "-3/2*t*x + 1/7", "x/(t^2*(x^2+1))", "1/(t*x)", "-1/2/(t+x)"}) {
    RatFunc f = R(s);
    CHECK(R(to_string(f)) == f);
  }
  CHECK(to_string(R("(t^2+1)*(x+2)")) == "t^2*x + 2*t^2 + x + 2");
}

TEST_CASE("parse errors carry positions") {
  try {
    R("t+");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(R("t+q"), ParseError);
  CHECK_THROWS_AS(R("1/(t-t)"), ParseError);
}
