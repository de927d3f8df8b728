#include "doctest.h"
#include "septel/separability.hpp"
#include "support.hpp"

using namespace septel;
using namespace septel::testing;

namespace {

constexpr VarSet kTB = var_bit(kT), kXB = var_bit(kX);

std::string cert(const Verdict& v) { return v.certificate ? to_string(*v.certificate) : "none"; }

std::string oracle(const char* f, OpKind kind, int order, int degree) {
  auto l = brute_force_annihilator({R(f)}, kind, order, degree);
  return l ? to_string(*l) : "none";
}

}  // namespace

TEST_CASE("splitness") {
  CHECK(is_split(P("(t^2+1)*(x^2+x+1)"), {kTB, kXB}));
  CHECK_FALSE(is_split(P("t+x"), {kTB, kXB}));
  CHECK(is_split(MPoly(5), {kTB, kXB}));
  CHECK(is_split(P("t*x*(x+1)"), {kTB}));

  auto a = split_part(P("t*(t+x)"));
  CHECK(a.split == P("t"));
  CHECK(a.nonsplit == P("t+x"));
  auto b = split_part(P("t^2+1"));
  CHECK(b.split == P("t^2+1"));
  CHECK(b.nonsplit.is_one());
  auto c = split_part(P("t+x"));
  CHECK(c.split.is_one());
  CHECK(c.nonsplit == P("t+x"));
  auto d = split_part(P("(t-1)^2*(t^2+x)*(t+x)"));
  CHECK(d.split == P("(t-1)^2"));
}

TEST_CASE("rational separability examples") {
  auto a = rational_separable(R("1/(t+x)"), OpKind::Derivation);
  CHECK_FALSE(a.separable);
  CHECK_FALSE(a.certificate);

  auto b = rational_separable(R("1/(t*x)"), OpKind::Shift);
  REQUIRE(b.separable);
  CHECK(cert(b) == "(t+1)*S - t");

  RatFunc f = R("(t+x)/(t*x)");
  auto c = rational_separable(f, OpKind::Derivation);
  REQUIRE(c.separable);
  CHECK(*c.certificate == ore_lclm({parse_ore("D", OpKind::Derivation), parse_ore("t*D+1", OpKind::Derivation)}));
  CHECK(ore_apply(*c.certificate, f).is_zero());
  REQUIRE(c.witnesses.split);
  CHECK(c.witnesses.split->terms.size() == 2);

  CHECK(rational_separable(RatFunc(), OpKind::Shift).separable);
}

TEST_CASE("gp form") {
  auto a = gp_form(R("(t+x+1)/(t+x)"));
  CHECK(a.z == RatFunc(1));
  CHECK(a.p == R("t+x"));
  CHECK(a.q == RatFunc(1));
  CHECK(a.rhat == RatFunc(1));
  auto b = gp_form(R("t+1"));
  CHECK(b.p == RatFunc(1));
  CHECK(b.q == R("t+1"));
  auto c = gp_form(R("2*x"));
  CHECK(c.z == R("2*x"));
  CHECK(c.q == RatFunc(1));
  CHECK_THROWS_AS(gp_form(RatFunc()), DegenerateInput);

  // random products of shifted linear factors
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    MPoly num(rng.range(1, 4)), den(rng.range(1, 3));
    for (int k = rng.range(0, 3); k > 0; --k) num *= P(rng.coin() ? "t+x" : "t") + MPoly(rng.range(-3, 3));
    for (int k = rng.range(0, 3); k > 0; --k) den *= P(rng.coin() ? "t+x" : "2*t") + MPoly(rng.range(-3, 3));
    RatFunc in(num * P(rng.coin() ? "x" : "1"), den);
    GPForm g = gp_form(in);
    CHECK(g.recombine() == in);
    MPoly q = g.q.num(), r = g.rhat.num(), p = g.p.num();
    for (long k = 0; k <= 8; ++k) CHECK(mp_gcd(q, r.shift(kT, Rat(k))).degree(kT) <= 0);
    CHECK(mp_gcd(q, p).degree(kT) <= 0);
    CHECK(mp_gcd(r, p.shift(kT, Rat(1))).degree(kT) <= 0);
  }
}

TEST_CASE("hypergeometric decider") {
  CHECK(hypergeom_separable(R("(t+x+1)/(t+x)")).separable);
  CHECK_FALSE(hypergeom_separable(R("t+x+1")).separable);
  CHECK(hypergeom_separable(R("t+1")).separable);
  CHECK_FALSE(hypergeom_separable(R("2*x")).separable);
  CHECK_THROWS_AS(hypergeom_separable(RatFunc()), DegenerateInput);
  // (S-1)^2 annihilates t + x
  OrePoly s1 = parse_ore("S-1", OpKind::Shift);
  CHECK(ore_apply(ore_mul(s1, s1), R("t+x")).is_zero());
}

TEST_CASE("differential split form") {
  auto a = diff_split_form(R("5/(t+x) + 2"));
  CHECK(a.g.is_zero());
  CHECK(a.polypart == RatFunc(2));
  CHECK(a.split_simple.is_zero());
  CHECK(a.nonsplit() == R("5/(t+x)"));
  MPoly z = MPoly::var(a.z_var);
  CHECK(normalize(a.residue_resultant) == normalize(z - MPoly(5)));

  auto b = diff_split_form(R("x/(t-1)^2"));
  CHECK(b.g == R("-x/(t-1)"));
  CHECK(b.polypart.is_zero());
  CHECK(b.nonsplit().is_zero());

  auto c = diff_split_form(R("1/t"));
  CHECK(c.g.is_zero());
  CHECK(c.split_simple == R("1/t"));
  CHECK(c.nonsplit().is_zero());

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    MPoly den = rng.nonzero_poly(1, 1) * rng.nonzero_poly(1, 0).pow(2);
    RatFunc f(rng.poly(2, 1), den);
    if (f.is_zero()) continue;
    auto d = diff_split_form(f);
    CHECK(d.recombine() == f);
  }
}

TEST_CASE("hyperexponential decider") {
  CHECK(hyperexp_separable(R("5/(t+x) + 2")).separable);
  CHECK_FALSE(hyperexp_separable(R("(1/2)/(t+x)")).separable);
  CHECK_FALSE(hyperexp_separable(R("x")).separable);
  CHECK(hyperexp_separable(R("1/t")).separable);
  CHECK(hyperexp_separable(R("2/(t+x) + 1/(t-x)")).separable);
  CHECK_FALSE(hyperexp_separable(R("3/t + 1/(t+x) - 1/(t-x)")).separable);
  CHECK_FALSE(hyperexp_separable(R("1/(t^2+x)")).separable);
  CHECK_THROWS_AS(hyperexp_separable(RatFunc()), DegenerateInput);
}

TEST_CASE("telescoper existence") {
  auto a = telescoper_exists_st_dx(R("1/(t+x)^2"));
  CHECK(a.separable);
  CHECK(cert(a) == "1");
  CHECK(a.witnesses.reduction->g == R("-1/(t+x)"));
  CHECK_FALSE(telescoper_exists_st_dx(R("1/(x^2+t)")).separable);
  CHECK(telescoper_exists_st_dx(R("x/(t^2*(x^2+1))")).separable);

  auto b = telescoper_exists_dt_sx(R("1/(t*x*(x+1))"));
  CHECK(b.separable);
  CHECK(b.witnesses.reduction->rem_num.is_zero());
  CHECK(b.witnesses.reduction->g == R("-1/(t*x)"));
  CHECK_FALSE(telescoper_exists_dt_sx(R("1/(x^2+t)")).separable);
  auto c = telescoper_exists_dt_sx(R("1/(t*(x^2+1))"));
  CHECK(c.separable);
  CHECK(cert(c) == "t*D + 1");

  CHECK_THROWS_AS(telescoper_exists_st_dx(parse_ratfunc("1/(t+x+y)", make_names({"x", "y"}))), std::invalid_argument);
}

TEST_CASE("brute force oracle") {
  CHECK(oracle("1/t", OpKind::Derivation, 1, 2) == "t*D + 1");
  CHECK(oracle("1/(t+x)", OpKind::Derivation, 3, 6) == "none");
  CHECK(oracle("1/(t*x)", OpKind::Shift, 1, 2) == "(t+1)*S - t");
  // sqrt(t + x) as the basis element with D b = b/(2(t+x))
  Matrix<RatFunc> act(1, 1);
  act(0, 0) = R("1/(2*(t+x))");
  CHECK_FALSE(brute_force_annihilator({RatFunc(1)}, OpKind::Derivation, 4, 8, act));
  // sqrt(t) over the basis (1, y): order one
  Matrix<RatFunc> half(2, 2);
  half(1, 1) = R("1/(2*t)");
  auto sq = brute_force_annihilator({RatFunc(), RatFunc(1)}, OpKind::Derivation, 4, 8, half);
  REQUIRE(sq);
  CHECK(to_string(*sq) == "2*t*D - 1");
  act(0, 0) = R("2");
  CHECK(brute_force_annihilator({R("(t+x)^5")}, OpKind::Derivation, 6, 6, act));
}
