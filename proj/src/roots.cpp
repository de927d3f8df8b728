#include "septel/roots.hpp"

#include <algorithm>
#include <cstdint>

namespace septel {

namespace {

using IPoly = std::vector<Int>;  // low to high

IPoly primitive_integer(const QPoly& p) {
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  IPoly r;
  for (const auto& c : p.coeffs()) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    r.push_back(v);
  }
  if (num_gcd != 0 && num_gcd != 1)
    for (auto& v : r) v /= num_gcd;
  return r;
}

Int eval(const IPoly& f, const Int& x) {
  Int r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

Int eval_mod(const IPoly& f, const Int& x, const Int& m) {
  Int r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    r = r * x + *it;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

IPoly derivative(const IPoly& f) {
  IPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

std::uint64_t eval_small(const std::vector<std::uint64_t>& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = (r * x + *it) % p;
  return r;
}

/// Integer roots of a squarefree integer polynomial with nonzero constant term.
std::vector<Int> roots_nonzero_constant(const IPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<Int> out;
  if (n <= 0) return out;
  if (n == 1) {
    if (mpz_divisible_p(f[0].get_mpz_t(), f[1].get_mpz_t())) out.push_back(-f[0] / f[1]);
    return out;
  }
  Int bound = abs(f[0]);
  {
    // Cauchy: |root| <= 1 + max |a_i / a_n|.
    Int m = 0;
    for (int i = 0; i < n; ++i) {
      Int q = abs(f[i]) / abs(f[n]) + 1;
      if (q > m) m = q;
    }
    m += 1;
    if (m < bound) bound = m;
  }
  IPoly df = derivative(f);
  Int p = 10007;
  for (;;) {
    if (!mpz_divisible_p(f[n].get_mpz_t(), p.get_mpz_t())) {
      const std::uint64_t ps = p.get_ui();
      std::vector<std::uint64_t> fm, dm;
      for (const auto& c : f) {
        Int r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        fm.push_back(r.get_ui());
      }
      for (const auto& c : df) {
        Int r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        dm.push_back(r.get_ui());
      }
      std::vector<std::uint64_t> rs;
      bool simple = true;
      for (std::uint64_t x = 0; x < ps && simple; ++x) {
        if (eval_small(fm, x, ps) != 0) continue;
        if (eval_small(dm, x, ps) == 0) simple = false;
        rs.push_back(x);
      }
      if (simple) {
        Int target = 2 * bound + 1;
        for (auto r0 : rs) {
          Int r = r0, mod = p;
          while (mod <= target) {
            mod = mod * mod;
            Int fr = eval_mod(f, r, mod), dr = eval_mod(df, r, mod), inv;
            if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), mod.get_mpz_t()) == 0) break;
            r = r - fr * inv;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
          }
          if (2 * r > mod) r -= mod;
          if (abs(r) <= bound && eval(f, r) == 0) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
}

IPoly squarefree_integer(const QPoly& p) {
  QPoly g = gcd(p, p.derivative());
  QPoly s = g.degree() > 0 ? div_exact(p, g) : p;
  return primitive_integer(s);
}

std::vector<Int> integer_roots_sqfree(IPoly f) {
  std::vector<Int> out;
  if (f.size() <= 1) return out;
  if (f[0] == 0) {
    out.push_back(0);
    f.erase(f.begin());
  }
  for (auto& r : roots_nonzero_constant(f)) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Int> integer_roots(const QPoly& p) {
  if (p.degree() <= 0) return {};
  return integer_roots_sqfree(squarefree_integer(p));
}

std::vector<Rat> rational_roots(const QPoly& p) {
  if (p.degree() <= 0) return {};
  IPoly f = squarefree_integer(p);
  const int n = static_cast<int>(f.size()) - 1;
  const Int an = f[n];
  // a_n^(n-1) f(w / a_n) is monic with integer coefficients.
  IPoly g(f.size());
  g[n] = 1;
  Int pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    g[i] = f[i] * pw;
    pw *= an;
  }
  std::vector<Rat> out;
  for (const auto& w : integer_roots_sqfree(g)) {
    Rat r(w, an);
    r.canonicalize();
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace septel
