#include "doctest.h"
#include "septel/reductions.hpp"
#include "septel/valdis.hpp"
#include "support.hpp"

using namespace septel;
using namespace septel::testing;

namespace {

/// Brute force: largest k in [1, limit] with gcd(u, u(t + k)) nontrivial.
long dispersion_scan(const MPoly& u, long limit) {
  long best = 0;
  for (long k = 1; k <= limit; ++k)
    if (mp_gcd(u, u.shift(kT, Rat(k))).degree(kT) > 0) best = k;
  return best;
}

}  // namespace

TEST_CASE("order at a polynomial") {
  CHECK(order_at(R("t^2/x"), P("t"), kT) == ExtInt{false, 2});
  CHECK(order_at(R("1/(t+x)^3"), P("t+x"), kT) == ExtInt{false, -3});
  CHECK(order_at(RatFunc(), P("t"), kT).infinite);
  CHECK_THROWS_AS(order_at(R("t"), P("x+1"), kT), std::invalid_argument);
}

TEST_CASE("dispersion") {
  MPoly u = P("t*(t+1)*(t-5)*(t^2+1)*(t^2+4*t+5)");
  CHECK(dispersion(u, kT).value == 6);
  CHECK(dispersion(u, kT).value == dispersion_scan(u, 20));
  CHECK(dispersion(MPoly(7), kT) == ExtInt{false, 0});
  CHECK(dispersion(MPoly(), kT).infinite);
  CHECK(dispersion(P("t*(t+x)"), kT).value == 0);
  CHECK(dispersion(P("t*(t+x)*(t+x+3)"), kT).value == 3);
  CHECK(dispersion(P("x*(x+4)*t"), kX).value == 4);
}

TEST_CASE("local dispersion") {
  MPoly u = P("t*(t+1)*(t-5)*(t^2+1)*(t^2+4*t+5)");
  CHECK(local_dispersion(u, P("t^2+1"), kT).value == 2);
  CHECK(local_dispersion(u, P("t"), kT).value == 6);
  CHECK(local_dispersion(u, P("t+x"), kT).value == 0);
  CHECK(local_dispersion(P("t*(t+1)"), P("t"), kT).value == 1);
  CHECK_THROWS_AS(local_dispersion(u, P("x"), kT), std::invalid_argument);
  // dispersion is the maximum of the local ones over the factors
  long m = 0;
  for (const char* p : {"t", "t^2+1"}) m = std::max(m, local_dispersion(u, P(p), kT).value);
  CHECK(m == dispersion(u, kT).value);
}

TEST_CASE("hermite reduction examples") {
  auto a = hermite_reduce(R("1/(t+x)^2"), kX);
  CHECK(a.g == R("-1/(t+x)"));
  CHECK(a.rem_num.is_zero());

  RatFunc f = R("(t+3)/(x^2+t)");
  auto b = hermite_reduce(f, kX);
  CHECK(b.g.is_zero());
  CHECK(b.remainder() == f);

  auto c = hermite_reduce(R("x/(x^2+t)^2"), kX);
  CHECK(c.g == R("-1/(2*(x^2+t))"));
  CHECK(c.rem_num.is_zero());

  auto d = hermite_reduce(R("(x^3+t)/(x^2*(x+t)^3)"), kX);
  CHECK(d.recombine() == R("(x^3+t)/(x^2*(x+t)^3)"));
  CHECK(mp_gcd(d.rem_den, d.rem_den.derivative(kX)).degree(kX) <= 0);
}

TEST_CASE("abramov reduction examples") {
  auto a = abramov_reduce(R("1/(x*(x+1))"), kX);
  CHECK(a.g == R("-1/x"));
  CHECK(a.rem_num.is_zero());

  RatFunc f = R("1/(x^2+t)");
  auto b = abramov_reduce(f, kX);
  CHECK(b.g.is_zero());
  CHECK(b.remainder() == f);

  auto c = abramov_reduce(R("1/(t*x*(x+2))"), kX);
  CHECK(c.rem_num.is_zero());
  CHECK(c.g == R("-1/(2*t)*(1/x + 1/(x+1))"));
  CHECK(delta(c.g, kX) == R("1/(t*x*(x+2))"));

  auto d = abramov_reduce(R("x^2 + 1/(x*(x+3)^2) + 1/(x^2+t)"), kX);
  CHECK(d.recombine() == R("x^2 + 1/(x*(x+3)^2) + 1/(x^2+t)"));
  CHECK(dispersion(d.rem_den, kX).value == 0);
}

TEST_CASE("reductions are idempotent") {
  Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    MPoly den = rng.nonzero_poly(1, 2) * rng.nonzero_poly(1, 1).pow(2);
    if (den.degree(kX) < 1) continue;
    RatFunc f(rng.poly(2, 2), den * den.shift(kX, Rat(2)));
    for (auto reduce : {hermite_reduce, abramov_reduce}) {
      auto r = reduce(f, kX);
      CHECK(r.recombine() == f);
      auto again = reduce(r.remainder(), kX);
      CHECK(again.g.is_zero());
      CHECK(again.remainder() == r.remainder());
    }
  }
}
