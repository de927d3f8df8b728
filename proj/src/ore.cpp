#include "septel/ore.hpp"

#include <algorithm>
#include <stdexcept>

#include "septel/linalg.hpp"
#include "septel/parse.hpp"

namespace septel {

OrePoly::OrePoly(OpKind kind, std::vector<QFrac> coeffs) : kind_(kind), c_(std::move(coeffs)) { trim(); }

OrePoly OrePoly::generator(OpKind kind) { return OrePoly(kind, {QFrac(), QFrac(1)}); }

OrePoly OrePoly::constant(OpKind kind, QFrac c) { return OrePoly(kind, {std::move(c)}); }

void OrePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrePoly OrePoly::monic() const {
  if (is_zero()) return *this;
  QFrac inv = QFrac(1) / lc();
  return inv * *this;
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind_ != b.kind_) throw std::invalid_argument("operator kinds differ");
  std::vector<QFrac> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return OrePoly(a.kind_, std::move(c));
}

OrePoly operator*(const QFrac& s, const OrePoly& a) {
  std::vector<QFrac> c;
  for (const auto& x : a.c_) c.push_back(s * x);
  return OrePoly(a.kind_, std::move(c));
}

QFrac twist(const QFrac& f, OpKind kind) { return kind == OpKind::Derivation ? f.derivative() : f.shift(Rat(1)); }

namespace {

/// generator * b
OrePoly lmul_generator(const OrePoly& b, OpKind kind) {
  std::vector<QFrac> c(b.coeffs().size() + 1);
  for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
    const QFrac& bj = b.coeffs()[j];
    if (kind == OpKind::Derivation) {
      c[j] = c[j] + bj.derivative();
      c[j + 1] = c[j + 1] + bj;
    } else {
      c[j + 1] = bj.shift(Rat(1));
    }
  }
  return OrePoly(kind, std::move(c));
}

void check_kinds(const OrePoly& a, const OrePoly& b) {
  if (!a.is_zero() && !b.is_zero() && a.kind() != b.kind()) throw std::invalid_argument("operator kinds differ");
}

}  // namespace

OrePoly ore_mul(const OrePoly& a, const OrePoly& b) {
  check_kinds(a, b);
  if (a.is_zero() || b.is_zero()) return OrePoly(a.kind(), {});
  OrePoly result(a.kind(), {});
  OrePoly power = b;  // generator^i * b
  for (int i = 0; i <= a.order(); ++i) {
    if (i > 0) power = lmul_generator(power, a.kind());
    if (!a.coeffs()[i].is_zero()) result = result + a.coeffs()[i] * power;
  }
  return result;
}

QFrac to_qfrac(const RatFunc& f) {
  if (!f.free_of(~var_bit(kT))) throw std::invalid_argument("coefficient depends on a parameter");
  return QFrac(to_qpoly(f.num(), kT), to_qpoly(f.den(), kT));
}

RatFunc to_ratfunc(const QFrac& f) { return RatFunc(from_qpoly(f.num(), kT), from_qpoly(f.den(), kT)); }

RatFunc ore_apply(const OrePoly& l, const RatFunc& f) {
  RatFunc result, cur = f;
  for (int i = 0; i <= l.order(); ++i) {
    if (i > 0) cur = l.kind() == OpKind::Derivation ? cur.derivative(kT) : cur.shift(kT, Rat(1));
    if (!l.coeffs()[i].is_zero()) result += to_ratfunc(l.coeffs()[i]) * cur;
  }
  return result;
}

OreDivRem ore_rdivrem(const OrePoly& a, const OrePoly& b) {
  if (b.is_zero()) throw std::domain_error("right division by the zero operator");
  check_kinds(a, b);
  OpKind kind = b.kind();
  OrePoly q(kind, {}), r = a;
  const int n = b.order();
  while (!r.is_zero() && r.order() >= n) {
    int m = r.order() - n;
    QFrac blc = b.lc();
    if (kind == OpKind::Shift) blc = blc.shift(Rat(m));
    std::vector<QFrac> tc(m + 1);
    tc[m] = r.lc() / blc;
    OrePoly term(kind, std::move(tc));
    q = q + term;
    r = r - ore_mul(term, b);
  }
  return {q, r};
}

OrePoly ore_gcrd(const OrePoly& a0, const OrePoly& b0) {
  OrePoly a = a0, b = b0;
  while (!b.is_zero()) {
    OrePoly r = ore_rdivrem(a, b).r;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

OrePoly ore_lclm(const std::vector<OrePoly>& ops) {
  if (ops.empty()) throw std::invalid_argument("lclm of an empty list");
  OpKind kind = ops[0].kind();
  int lo = 0, hi = 0;
  for (const auto& op : ops) {
    if (op.is_zero()) throw std::invalid_argument("lclm of the zero operator");
    if (op.kind() != kind) throw std::invalid_argument("operator kinds differ");
    lo = std::max(lo, op.order());
    hi += op.order();
  }
  // Remainders of generator^j modulo each operator, for j = 0..hi.
  std::vector<std::vector<OrePoly>> rems(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    OrePoly g = OrePoly::constant(kind, QFrac(1));
    for (int j = 0; j <= hi; ++j) {
      rems[i].push_back(ore_rdivrem(g, ops[i]).r);
      g = lmul_generator(g, kind);
    }
  }
  for (int n = lo; n <= hi; ++n) {
    std::size_t rows = 0;
    for (const auto& op : ops) rows += static_cast<std::size_t>(op.order());
    Matrix<QFrac> m(rows, static_cast<std::size_t>(n));
    std::vector<QFrac> rhs(rows);
    std::size_t row = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (int k = 0; k < ops[i].order(); ++k, ++row) {
        for (int j = 0; j < n; ++j) m(row, j) = rems[i][j].coeff(k);
        rhs[row] = -rems[i][n].coeff(k);
      }
    }
    if (auto sol = solve(m, rhs)) {
      std::vector<QFrac> c = *sol;
      c.push_back(QFrac(1));
      return OrePoly(kind, std::move(c));
    }
  }
  throw std::logic_error("lclm ansatz found no solution");
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

std::string to_string(const OrePoly& l) {
  if (l.is_zero()) return "0";
  QPoly den(Rat(1));
  for (const auto& c : l.coeffs())
    if (!c.is_zero()) den = div_exact(den * c.den(), gcd(den, c.den()));
  std::vector<MPoly> polys;
  for (const auto& c : l.coeffs()) polys.push_back(from_qpoly(c.num() * div_exact(den, c.den()), kT));
  MPoly all;
  VarId aux = 1;
  for (std::size_t i = 0; i < polys.size(); ++i) all += polys[i] * MPoly::var(aux, static_cast<unsigned>(i));
  Rat norm = all.integer_normalizer();
  if (sgn(polys.back().leading_coeff()) < 0) norm = -norm;

  const std::string op = l.kind() == OpKind::Derivation ? "D" : "S";
  std::string out;
  bool first = true;
  for (int i = l.order(); i >= 0; --i) {
    MPoly p = polys[i] * norm;
    if (p.is_zero()) continue;
    std::string ops = i == 0 ? "" : (i == 1 ? op : op + "^" + std::to_string(i));
    bool neg = sgn(p.leading_coeff()) < 0;
    if (neg) p = -p;
    std::string body;
    if (p.size() > 1) {
      body = "(" + compact(to_string(p)) + ")" + (ops.empty() ? "" : "*" + ops);
    } else if (p.is_one() && !ops.empty()) {
      body = ops;
    } else {
      body = compact(to_string(p)) + (ops.empty() ? "" : "*" + ops);
    }
    if (first) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

namespace {

OrePoly lower_ore(const Expr& e, OpKind kind) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return OrePoly::constant(kind, QFrac(Rat(e.value)));
    case Expr::Kind::Variable: {
      if (e.name == "t") return OrePoly::constant(kind, QFrac::x());
      if (e.name == "D" || e.name == "S") {
        OpKind k = e.name == "D" ? OpKind::Derivation : OpKind::Shift;
        if (k != kind) throw std::invalid_argument("operator symbol " + e.name + " does not match the requested kind");
        return OrePoly::generator(kind);
      }
      throw std::invalid_argument("operator coefficients must lie in Q(t); found '" + e.name + "'");
    }
    case Expr::Kind::Add:
      return lower_ore(*e.lhs, kind) + lower_ore(*e.rhs, kind);
    case Expr::Kind::Sub:
      return lower_ore(*e.lhs, kind) - lower_ore(*e.rhs, kind);
    case Expr::Kind::Mul:
      return ore_mul(lower_ore(*e.lhs, kind), lower_ore(*e.rhs, kind));
    case Expr::Kind::Div: {
      OrePoly d = lower_ore(*e.rhs, kind);
      if (d.order() != 0) throw std::invalid_argument("division by an operator");
      return ore_mul(lower_ore(*e.lhs, kind), OrePoly::constant(kind, QFrac(1) / d.lc()));
    }
    case Expr::Kind::Pow: {
      OrePoly b = lower_ore(*e.lhs, kind);
      if (e.value < 0) {
        if (b.order() != 0) throw std::invalid_argument("negative power of an operator");
        return OrePoly::constant(kind, b.lc().pow(static_cast<int>(e.value.get_si())));
      }
      if (e.value > 1000) throw std::invalid_argument("exponent too large");
      OrePoly r = OrePoly::constant(kind, QFrac(1));
      for (long i = 0; i < e.value.get_si(); ++i) r = ore_mul(r, b);
      return r;
    }
    case Expr::Kind::Neg:
      return -lower_ore(*e.lhs, kind);
  }
  throw std::logic_error("bad expression node");
}

}  // namespace

OrePoly parse_ore(const std::string& text, OpKind kind) {
  OrePoly r = lower_ore(*parse_ast(text), kind);
  if (r.is_zero()) return OrePoly(kind, {});
  return r;
}

}  // namespace septel
