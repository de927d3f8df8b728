#include "septel/parse.hpp"

#include <cctype>

namespace septel {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Integer, Ident, Op, End } kind;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int start = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Integer, s.substr(i, j - i), line, start});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), line, start});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Op, std::string(1, c), line, start});
      ++col;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, start);
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.kind == Token::Kind::End ? "unexpected end of input" : what, t.line, t.column);
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (is_op("+") || is_op("-")) {
      Token op = toks_[pos_++];
      auto n = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
      n->lhs = std::move(lhs);
      n->rhs = term();
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (is_op("*") || is_op("/")) {
      Token op = toks_[pos_++];
      auto n = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op);
      n->lhs = std::move(lhs);
      n->rhs = factor();
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<Expr> factor() {
    auto b = base();
    if (is_op("^")) {
      Token op = toks_[pos_++];
      bool neg = false;
      if (is_op("-")) {
        neg = true;
        ++pos_;
      }
      if (peek().kind != Token::Kind::Integer) fail("exponent must be an integer literal");
      auto n = node(Expr::Kind::Pow, op);
      n->value = Int(toks_[pos_++].text);
      if (neg) n->value = -n->value;
      n->lhs = std::move(b);
      return n;
    }
    return b;
  }

  std::unique_ptr<Expr> base() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Integer) {
      auto n = node(Expr::Kind::Integer, t);
      n->value = Int(t.text);
      ++pos_;
      return n;
    }
    if (t.kind == Token::Kind::Ident) {
      auto n = node(Expr::Kind::Variable, t);
      n->name = t.text;
      ++pos_;
      return n;
    }
    if (is_op("(")) {
      ++pos_;
      auto e = expr();
      if (!is_op(")")) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (is_op("-")) {
      auto n = node(Expr::Kind::Neg, t);
      ++pos_;
      n->lhs = factor();
      return n;
    }
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_ast(const std::string& text) { return Parser(tokenize(text)).parse(); }

RatFunc lower_ratfunc(const Expr& e, const VarNames& names) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return RatFunc(Rat(e.value));
    case Expr::Kind::Variable: {
      VarId v = names.find(e.name);
      if (v < 0) throw ParseError("unknown variable '" + e.name + "'", e.line, e.column);
      return RatFunc(MPoly::var(v));
    }
    case Expr::Kind::Add:
      return lower_ratfunc(*e.lhs, names) + lower_ratfunc(*e.rhs, names);
    case Expr::Kind::Sub:
      return lower_ratfunc(*e.lhs, names) - lower_ratfunc(*e.rhs, names);
    case Expr::Kind::Mul:
      return lower_ratfunc(*e.lhs, names) * lower_ratfunc(*e.rhs, names);
    case Expr::Kind::Div: {
      RatFunc d = lower_ratfunc(*e.rhs, names);
      if (d.is_zero()) throw ParseError("division by zero", e.line, e.column);
      return lower_ratfunc(*e.lhs, names) / d;
    }
    case Expr::Kind::Pow: {
      if (!e.value.fits_sint_p() || abs(e.value) > 10000) throw ParseError("exponent too large", e.line, e.column);
      RatFunc b = lower_ratfunc(*e.lhs, names);
      if (b.is_zero() && e.value < 0) throw ParseError("division by zero", e.line, e.column);
      return b.pow(static_cast<int>(e.value.get_si()));
    }
    case Expr::Kind::Neg:
      return -lower_ratfunc(*e.lhs, names);
  }
  throw std::logic_error("bad expression node");
}

RatFunc parse_ratfunc(const std::string& text, const VarNames& names) { return lower_ratfunc(*parse_ast(text), names); }

MPoly parse_poly(const std::string& text, const VarNames& names) {
  RatFunc f = parse_ratfunc(text, names);
  if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial: " + text);
  return f.num() * Rat(1 / f.den().constant_value());
}

VarNames make_names(const std::vector<std::string>& params) {
  std::vector<std::string> n{"t"};
  for (const auto& p : params) n.push_back(p);
  return VarNames(std::move(n));
}

}  // namespace septel
