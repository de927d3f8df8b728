#include "septel/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "septel/upoly.hpp"

namespace septel {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId v, unsigned power) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable id out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  Monomial m;
  m.exp[v] = static_cast<std::uint16_t>(power);
  m.total = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (total > other.total) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

VarSet Monomial::support() const {
  VarSet s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i]) s |= var_bit(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{exp[i]} + other.exp[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.total = total + other.total;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  m.total = total - other.total;
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::min(a.exp[i], b.exp[i]);
    m.total += m.exp[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// MPoly basics

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rat(c)});
}

MPoly::MPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

MPoly MPoly::var(VarId v, unsigned power) { return monomial(Monomial::var(v, power), Rat(1)); }

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.empty() ? Rat(0) : terms_[0].coeff;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

const Rat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.front().coeff;
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
  return terms_.front().mono;
}

int MPoly::degree(VarId v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[v]);
  return d;
}

int MPoly::min_degree(VarId v) const {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[v]);
  return d;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total); }

VarSet MPoly::support() const {
  VarSet s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

int MPoly::max_var() const {
  VarSet s = support();
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (contains(s, i)) return i;
  return -1;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                               bool subtract) {
  std::vector<MPoly::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && compare(a[i].mono, b[j].mono) > 0)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || compare(a[i].mono, b[j].mono) < 0) {
      r.push_back({b[j].mono, subtract ? Rat(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rat c = subtract ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono) * b.terms_[0].coeff;
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono) * a.terms_[0].coeff;
  std::vector<MPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return MPoly::from_terms(std::move(prod));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), b = *this;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::mul_monomial(const Monomial& m) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MPoly MPoly::div_monomial(const Monomial& m) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = gcd(m, t.mono);
  return m;
}

MPoly MPoly::derivative(VarId v) const {
  std::vector<Term> r;
  for (const auto& t : terms_) {
    if (t.mono.exp[v] == 0) continue;
    Monomial m = t.mono;
    Rat c = t.coeff * static_cast<long>(m.exp[v]);
    m.exp[v] -= 1;
    m.total -= 1;
    r.push_back({m, std::move(c)});
  }
  return from_terms(std::move(r));
}

std::vector<MPoly> MPoly::coefficients(VarId v) const {
  int d = degree(v);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exp[v];
    m.exp[v] = 0;
    m.total -= e;
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(VarId v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m = Monomial::var(v, static_cast<unsigned>(i));
    for (const auto& t : coeffs[i].terms_) {
      if (t.mono.exp[v] != 0) throw std::invalid_argument("coefficient depends on the main variable");
      r.push_back({t.mono * m, t.coeff});
    }
  }
  return from_terms(std::move(r));
}

MPoly MPoly::lead_coeff_in(VarId v) const {
  auto c = coefficients(v);
  return c.empty() ? MPoly() : c.back();
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const {
  auto c = coefficients(v);
  MPoly r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * value + *it;
  return r;
}

MPoly MPoly::shift(VarId v, const Rat& amount) const {
  if (sgn(amount) == 0) return *this;
  return substitute(v, MPoly::var(v) + MPoly(amount));
}

MPoly MPoly::evaluate(VarId v, const Rat& value) const {
  std::vector<Term> r;
  r.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exp[v];
    if (e == 0) {
      r.push_back(t);
      continue;
    }
    m.exp[v] = 0;
    m.total -= e;
    Rat p;
    mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
    r.push_back({m, t.coeff * p});
  }
  return from_terms(std::move(r));
}

MPoly MPoly::rename(const std::vector<VarId>& map) const {
  std::vector<Term> r;
  r.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.mono.exp[i]) continue;
      VarId to = i < static_cast<int>(map.size()) ? map[i] : i;
      m = m * Monomial::var(to, t.mono.exp[i]);
    }
    r.push_back({m, t.coeff});
  }
  return from_terms(std::move(r));
}

Rat MPoly::integer_normalizer() const {
  if (terms_.empty()) return Rat(1);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rat r(den_lcm, num_gcd);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Division

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * Rat(1 / b.constant_value());
  VarSet sb = b.support();
  for (int v = 0; v < kMaxVars; ++v)
    if (contains(sb, v) && a.degree(v) < b.degree(v)) return std::nullopt;
  if (b.size() == 1) {
    const auto& bt = b.terms()[0];
    if (!bt.mono.divides(a.monomial_content())) return std::nullopt;
    return a.div_monomial(bt.mono) * Rat(1 / bt.coeff);
  }
  const Monomial& lm = b.leading_monomial();
  const Rat inv = 1 / b.leading_coeff();
  std::vector<MPoly::Term> quotient;
  MPoly rem = a;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms()[0];
    if (!lm.divides(lt.mono)) return std::nullopt;
    MPoly::Term q{lt.mono / lm, lt.coeff * inv};
    rem -= b.mul_monomial(q.mono) * q.coeff;
    quotient.push_back(std::move(q));
  }
  return MPoly::from_terms(std::move(quotient));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *q;
}

MPoly normalize(const MPoly& a) {
  if (a.is_zero()) return a;
  return a * Rat(1 / a.leading_coeff());
}

// ---------------------------------------------------------------------------
// Recursive-dense helpers: polynomials in one main variable with MPoly
// coefficients, used by the PRS algorithms.

namespace {

using Dense = std::vector<MPoly>;  // index = degree in the main variable

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense scale(const Dense& p, const MPoly& c) {
  Dense r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(x * c);
  trim(r);
  return r;
}

Dense divide_coeffs(const Dense& p, const MPoly& c) {
  if (c.is_one()) return p;
  Dense r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(divide_exact(x, c));
  return r;
}

Dense prem(Dense a, const Dense& b) {
  const int db = deg(b);
  const MPoly& lcb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    MPoly lr = a.back();
    int shift = deg(a) - db;
    for (auto& x : a) x *= lcb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= lr * b[j];
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) a = scale(a, lcb.pow(static_cast<unsigned>(e)));
  return a;
}

MPoly coeff_content(const Dense& p) {
  MPoly g;
  for (const auto& c : p) {
    g = mp_gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

/// Subresultant PRS; returns the last nonzero remainder (primitive).
Dense subresultant_gcd(Dense a, Dense b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  MPoly g(1), h(1);
  while (true) {
    int delta = deg(a) - deg(b);
    Dense r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return Dense{MPoly(1)};
    a = std::move(b);
    MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    b = divide_coeffs(r, divisor);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  MPoly c = coeff_content(b);
  return divide_coeffs(b, c);
}

Dense to_dense(const MPoly& p, VarId v) { return p.coefficients(v); }

MPoly from_dense(const Dense& p, VarId v) { return MPoly::from_coefficients(v, p); }

MPoly gcd_impl(const MPoly& a0, const MPoly& b0);

MPoly gcd_with_coeffs(const MPoly& b, const MPoly& a, VarId v) {
  MPoly g = b;
  for (const auto& c : a.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

Int max_norm(const MPoly& p) {
  Int m = 0;
  for (const auto& t : p.terms()) {
    Int v = abs(t.coeff.get_num());
    if (v > m) m = v;
  }
  return m;
}

Int integer_content(const MPoly& p) {
  Int g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

MPoly evaluate_int(const MPoly& p, VarId v, const Int& value) {
  std::vector<MPoly::Term> r;
  r.reserve(p.size());
  Int pw;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m.exp[v];
    m.exp[v] = 0;
    m.total -= e;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e);
    r.push_back({m, Rat(t.coeff.get_num() * pw)});
  }
  return MPoly::from_terms(std::move(r));
}

/// Heuristic gcd of polynomials with integer coefficients: evaluate one
/// variable at a large integer, recurse, and rebuild the candidate from its
/// symmetric xi-adic digits. The candidate is accepted only if it divides
/// both inputs. Returns nullopt when the heuristic gives up.
std::optional<MPoly> heu_gcd(const MPoly& a0, const MPoly& b0, int depth) {
  if (a0.is_constant() && b0.is_constant()) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a0.constant_value().get_num_mpz_t(), b0.constant_value().get_num_mpz_t());
    return MPoly(Rat(g));
  }
  Int ca = integer_content(a0), cb = integer_content(b0), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a0.is_constant() || b0.is_constant()) return MPoly(Rat(c));
  MPoly a = a0 * Rat(1, ca), b = b0 * Rat(1, cb);
  if (depth > 12) return std::nullopt;
  VarSet s = a.support() | b.support();
  VarId x = 0;
  while (!contains(s, x)) ++x;
  Int na = max_norm(a), nb = max_norm(b);
  Int xi = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto gamma = heu_gcd(evaluate_int(a, x, xi), evaluate_int(b, x, xi), depth + 1);
    if (gamma) {
      std::vector<MPoly::Term> terms;
      MPoly rest = *gamma;
      Int half = xi / 2;
      for (unsigned i = 0; !rest.is_zero(); ++i) {
        std::vector<MPoly::Term> digit;
        for (const auto& t : rest.terms()) {
          Int d;
          mpz_mod(d.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
          if (d > half) d -= xi;
          if (d != 0) digit.push_back({t.mono, Rat(d)});
        }
        MPoly dp = MPoly::from_terms(digit);
        for (const auto& t : dp.terms()) terms.push_back({t.mono * Monomial::var(x, i), t.coeff});
        rest = (rest - dp) * Rat(1, xi);
        if (i > 4096) break;
      }
      MPoly g = MPoly::from_terms(std::move(terms));
      if (!g.is_zero()) {
        g *= Rat(1, integer_content(g));
        if (exact_divide(a, g) && exact_divide(b, g)) return g * Rat(c);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

/// True if a and b specialized at some integer point of the other variables,
/// chosen so both leading coefficients in v survive, are coprime in v. Then
/// the true gcd is free of v. False means "unknown".
bool coprime_at_point(const MPoly& a, const MPoly& b, VarId v, VarSet others) {
  others &= ~var_bit(v);
  MPoly la = a.lead_coeff_in(v), lb = b.lead_coeff_in(v);
  for (long attempt = 0; attempt < 3; ++attempt) {
    MPoly sa = a, sb = b, ca = la, cb = lb;
    for (VarId x = 0; x < kMaxVars; ++x) {
      if (!contains(others, x)) continue;
      Rat val((attempt * 31 + x * 17 + 5) % 23 + 2 + attempt);
      sa = sa.evaluate(x, val);
      sb = sb.evaluate(x, val);
      ca = ca.evaluate(x, val);
      cb = cb.evaluate(x, val);
    }
    if (ca.is_zero() || cb.is_zero()) continue;
    return gcd(to_qpoly(sa, v), to_qpoly(sb, v)).degree() == 0;
  }
  return false;
}

MPoly gcd_impl(const MPoly& a0, const MPoly& b0) {
  if (a0.is_constant() || b0.is_constant()) return MPoly(1);
  Monomial ma = a0.monomial_content(), mb = b0.monomial_content();
  Monomial mg = gcd(ma, mb);
  MPoly a = ma.is_one() ? a0 : a0.div_monomial(ma);
  MPoly b = mb.is_one() ? b0 : b0.div_monomial(mb);
  // Integer coefficients keep the pseudo-remainder arithmetic cheap.
  a *= a.integer_normalizer();
  b *= b.integer_normalizer();
  MPoly mono = MPoly::monomial(mg, Rat(1));
  if (a.is_constant() || b.is_constant()) return mono;

  VarSet sa = a.support(), sb = b.support();
  if (sa != sb) {
    for (int v = 0; v < kMaxVars; ++v) {
      if (contains(sa, v) && !contains(sb, v)) return mono * gcd_with_coeffs(b, a, v);
      if (contains(sb, v) && !contains(sa, v)) return mono * gcd_with_coeffs(a, b, v);
    }
  }

  // Cheap divisibility shortcuts.
  if (a.size() >= b.size()) {
    if (auto q = exact_divide(a, b)) return mono * b;
  } else {
    if (auto q = exact_divide(b, a)) return mono * a;
  }

  // Main variable: smallest maximal degree.
  VarId v = -1;
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < kMaxVars; ++i) {
    if (!contains(sa, i)) continue;
    int d = std::max(a.degree(i), b.degree(i));
    if (d < best) {
      best = d;
      v = i;
    }
  }

  if (auto h = heu_gcd(a, b, 0)) return mono * *h;

  if (sa == var_bit(v)) {
    QPoly g = gcd(to_qpoly(a, v), to_qpoly(b, v));
    return mono * from_qpoly(g, v);
  }

  Dense da = to_dense(a, v), db = to_dense(b, v);
  MPoly ca = coeff_content(da), cb = coeff_content(db);
  MPoly c = gcd_impl(ca, cb);
  if (coprime_at_point(a, b, v, sa)) return mono * c;
  if (!ca.is_one()) da = divide_coeffs(da, ca);
  if (!cb.is_one()) db = divide_coeffs(db, cb);
  Dense g = subresultant_gcd(std::move(da), std::move(db));
  return mono * c * from_dense(g, v);
}

}  // namespace

QPoly to_qpoly(const MPoly& p, VarId v) {
  if (!p.free_of(~var_bit(v))) throw std::invalid_argument("polynomial is not univariate in the requested variable");
  std::vector<Rat> c(std::max(p.degree(v) + 1, 0));
  for (const auto& t : p.terms()) c[t.mono.exp[v]] = t.coeff;
  return QPoly(std::move(c));
}

MPoly from_qpoly(const QPoly& p, VarId v) {
  std::vector<MPoly::Term> r;
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeffs()[i]) != 0) r.push_back({Monomial::var(v, i), p.coeffs()[i]});
  return MPoly::from_terms(std::move(r));
}

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  return normalize(gcd_impl(a, b));
}

MPoly mp_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return normalize(divide_exact(a, mp_gcd(a, b)) * b);
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, VarId v) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  Dense db = to_dense(b, v);
  return from_dense(prem(to_dense(a, v), db), v);
}

MPoly resultant(const MPoly& a0, const MPoly& b0, VarId v) {
  if (a0.is_zero() || b0.is_zero()) return MPoly();
  Dense a = to_dense(a0, v), b = to_dense(b0, v);
  if (deg(a) == 0 && deg(b) == 0) return MPoly(1);
  if (deg(b) == 0) return b[0].pow(static_cast<unsigned>(deg(a)));
  if (deg(a) == 0) return a[0].pow(static_cast<unsigned>(deg(b)));
  long sign = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -1;
  }
  MPoly g(1), h(1);
  while (true) {
    int delta = deg(a) - deg(b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -sign;
    Dense r = prem(a, b);
    if (r.empty()) return MPoly();
    a = std::move(b);
    b = divide_coeffs(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (deg(b) == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^deg a
  int da = deg(a);
  MPoly lb = b[0];
  MPoly res;
  if (da == 0) {
    res = h;
  } else if (da == 1) {
    res = lb;
  } else {
    res = divide_exact(lb.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  }
  return res * Rat(sign);
}

MPoly discriminant(const MPoly& a, VarId v) { return resultant(a, a.derivative(v), v); }

// ---------------------------------------------------------------------------
// Contents, squarefree decomposition

ContentPP content_pp(const MPoly& a, VarSet block) {
  if (a.is_zero()) throw std::domain_error("content of zero polynomial");
  // Group terms by their exponents outside the block.
  std::vector<std::pair<Monomial, std::vector<MPoly::Term>>> groups;
  for (const auto& t : a.terms()) {
    Monomial outer, inner;
    for (int i = 0; i < kMaxVars; ++i) {
      if (contains(block, i)) {
        inner.exp[i] = t.mono.exp[i];
        inner.total += t.mono.exp[i];
      } else {
        outer.exp[i] = t.mono.exp[i];
        outer.total += t.mono.exp[i];
      }
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == outer; });
    if (it == groups.end()) {
      groups.push_back({outer, {}});
      it = groups.end() - 1;
    }
    it->second.push_back({inner, t.coeff});
  }
  MPoly g;
  for (auto& grp : groups) {
    g = mp_gcd(g, MPoly::from_terms(std::move(grp.second)));
    if (g.is_constant()) break;
  }
  if (g.is_constant()) g = MPoly(1);
  return {g, divide_exact(a, g)};
}

ContentPP content_pp_in(const MPoly& a, VarId v) { return content_pp(a, ~var_bit(v)); }

MPoly SqfreeDecomp::expand() const {
  MPoly r = coefficient;
  for (const auto& p : parts) r *= p.factor.pow(static_cast<unsigned>(p.multiplicity));
  return r;
}

SqfreeDecomp sqfree_decomp(const MPoly& a, VarId v) {
  if (a.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  SqfreeDecomp out;
  if (a.degree(v) <= 0) {
    out.coefficient = a;
    return out;
  }
  MPoly pp = content_pp_in(a, v).pp;
  MPoly da = pp.derivative(v);
  MPoly g = mp_gcd(pp, da);
  MPoly b = divide_exact(pp, g);
  MPoly c = divide_exact(da, g);
  MPoly d = c - b.derivative(v);
  int i = 1;
  while (b.degree(v) > 0) {
    MPoly ai = mp_gcd(b, d);
    b = divide_exact(b, ai);
    c = divide_exact(d, ai);
    d = c - b.derivative(v);
    if (ai.degree(v) > 0) out.parts.push_back({ai, i});
    ++i;
  }
  MPoly prod(1);
  for (const auto& p : out.parts) prod *= p.factor.pow(static_cast<unsigned>(p.multiplicity));
  out.coefficient = divide_exact(a, prod);
  return out;
}

MPoly squarefree_part(const MPoly& a, VarId v) {
  MPoly r(1);
  for (const auto& p : sqfree_decomp(a, v).parts) r *= p.factor;
  return r;
}

VarId fresh_var(std::initializer_list<const MPoly*> polys, VarId floor) {
  VarId m = floor - 1;
  for (const MPoly* p : polys) m = std::max(m, p->max_var());
  if (m + 1 >= kMaxVars) throw std::overflow_error("out of variable ids");
  return std::max(m + 1, floor);
}

}  // namespace septel
