#include "weylcent/parser.hpp"

#include <cctype>
#include <limits>

namespace weylcent {

namespace {

struct Token {
  enum class Type { Plus, Minus, Star, Caret, Slash, LParen, RParen, Int, Var, End };
  Type type = Type::End;
  std::size_t pos = 0;
  BigInt value = 0;      // Int
  bool is_deriv = false; // Var
  int index = 0;         // Var: 0 when written bare
  bool indexed = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    Token t;
    t.pos = i_;
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    switch (c) {
      case '+': ++i_; t.type = Token::Type::Plus; return t;
      case '-': ++i_; t.type = Token::Type::Minus; return t;
      case '*': ++i_; t.type = Token::Type::Star; return t;
      case '^': ++i_; t.type = Token::Type::Caret; return t;
      case '/': ++i_; t.type = Token::Type::Slash; return t;
      case '(': ++i_; t.type = Token::Type::LParen; return t;
      case ')': ++i_; t.type = Token::Type::RParen; return t;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      t.type = Token::Type::Int;
      t.value = bigint_from_string(std::string(text_.substr(i_, j - i_)));
      i_ = j;
      return t;
    }
    if (c == 'x' || c == 'd') {
      std::size_t j = i_ + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      t.type = Token::Type::Var;
      t.is_deriv = (c == 'd');
      if (j > i_ + 1) {
        t.indexed = true;
        t.index = std::stoi(std::string(text_.substr(i_ + 1, j - i_ - 1)));
      }
      i_ = j;
      return t;
    }
    throw ParseError(ParseError::Kind::Syntax, i_,
                     std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, int nvars) : lex_(text), nvars_(nvars) { advance(); }

  OpExpr parse() {
    OpExpr e = expr();
    if (cur_.type != Token::Type::End)
      throw ParseError(ParseError::Kind::Syntax, cur_.pos,
                       "unexpected token after expression");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool accept(Token::Type t) {
    if (cur_.type != t) return false;
    advance();
    return true;
  }

  OpExpr expr() {
    OpExpr sum;
    sum.kind = OpExpr::Kind::Sum;
    sum.pos = cur_.pos;
    int sign = accept(Token::Type::Minus) ? -1 : 1;
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
      sign = cur_.type == Token::Type::Plus ? 1 : -1;
      advance();
      sum.children.push_back(term());
      sum.signs.push_back(sign);
    }
    return sum;
  }

  OpExpr term() {
    OpExpr prod;
    prod.kind = OpExpr::Kind::Product;
    prod.pos = cur_.pos;
    prod.children.push_back(factor());
    while (accept(Token::Type::Star)) prod.children.push_back(factor());
    return prod;
  }

  OpExpr factor() {
    OpExpr base = atom();
    if (!accept(Token::Type::Caret)) return base;
    if (cur_.type == Token::Type::Minus)
      throw ParseError(ParseError::Kind::NegativeExponent, cur_.pos,
                       "exponents must be nonnegative");
    if (cur_.type != Token::Type::Int)
      throw ParseError(ParseError::Kind::Syntax, cur_.pos, "expected exponent");
    if (cur_.value > std::numeric_limits<int>::max())
      throw ParseError(ParseError::Kind::BadLiteral, cur_.pos, "exponent too large");
    OpExpr pow;
    pow.kind = OpExpr::Kind::Power;
    pow.pos = base.pos;
    pow.exponent = static_cast<unsigned>(cur_.value.get_ui());
    pow.children.push_back(std::move(base));
    advance();
    return pow;
  }

  OpExpr atom() {
    if (accept(Token::Type::LParen)) {
      OpExpr inner = expr();
      if (!accept(Token::Type::RParen))
        throw ParseError(ParseError::Kind::Syntax, cur_.pos, "expected ')'");
      return inner;
    }
    if (cur_.type == Token::Type::Var) {
      OpExpr v;
      v.kind = OpExpr::Kind::Var;
      v.pos = cur_.pos;
      v.is_deriv = cur_.is_deriv;
      if (cur_.indexed) {
        v.var_index = cur_.index;
      } else {
        if (nvars_ != 1)
          throw ParseError(ParseError::Kind::UnknownVariable, cur_.pos,
                           "unindexed variable requires nvars = 1");
        v.var_index = 1;
      }
      if (v.var_index < 1 || v.var_index > nvars_)
        throw ParseError(ParseError::Kind::UnknownVariable, cur_.pos,
                         "variable index out of range 1.." + std::to_string(nvars_));
      advance();
      return v;
    }
    if (cur_.type == Token::Type::Int) {
      OpExpr lit;
      lit.kind = OpExpr::Kind::Lit;
      lit.pos = cur_.pos;
      lit.num = cur_.value;
      advance();
      if (accept(Token::Type::Slash)) {
        if (cur_.type != Token::Type::Int)
          throw ParseError(ParseError::Kind::Syntax, cur_.pos, "expected denominator");
        if (cur_.value == 0)
          throw ParseError(ParseError::Kind::BadLiteral, cur_.pos, "zero denominator");
        lit.den = cur_.value;
        advance();
      }
      return lit;
    }
    throw ParseError(ParseError::Kind::Syntax, cur_.pos, "expected expression");
  }

  Lexer lex_;
  Token cur_;
  int nvars_;
};

template <class Ring>
typename Ring::Elem literal_coeff(const OpExpr& lit, const Ring& ring);

template <>
Rational literal_coeff(const OpExpr& lit, const RationalRing&) {
  return Rational(lit.num, lit.den);
}

template <>
FpElem literal_coeff(const OpExpr& lit, const FpRing& ring) {
  if (lit.den != 1)
    throw ParseError(ParseError::Kind::BadLiteral, lit.pos,
                     "rational literals are not allowed over F_p");
  return ring.from_bigint(lit.num);
}

}  // namespace

OpExpr parse_expression(std::string_view text, int nvars) {
  return Parser(text, nvars).parse();
}

template <class Ring>
WeylElement<Ring> evaluate(const OpExpr& ast, int nvars, Ring ring) {
  switch (ast.kind) {
    case OpExpr::Kind::Sum: {
      WeylElement<Ring> sum(nvars, ring);
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        WeylElement<Ring> t = evaluate(ast.children[i], nvars, ring);
        sum = ast.signs[i] > 0 ? sum + t : sum - t;
      }
      return sum;
    }
    case OpExpr::Kind::Product: {
      WeylElement<Ring> prod = weyl_one(nvars, ring);
      for (const OpExpr& f : ast.children) prod = prod * evaluate(f, nvars, ring);
      return prod;
    }
    case OpExpr::Kind::Power:
      return weyl_pow(evaluate(ast.children[0], nvars, ring), ast.exponent);
    case OpExpr::Kind::Var:
      return ast.is_deriv ? d_gen(ast.var_index, nvars, ring)
                          : x_gen(ast.var_index, nvars, ring);
    case OpExpr::Kind::Lit:
      return WeylElement<Ring>::monomial(MonomialKey::one(nvars),
                                         literal_coeff(ast, ring), ring);
  }
  throw Error("unreachable");
}

WeylQ parse_rational(std::string_view text, int nvars) {
  return evaluate(parse_expression(text, nvars), nvars, RationalRing{});
}

WeylFp parse_fp(std::string_view text, int nvars, Prime p) {
  return evaluate(parse_expression(text, nvars), nvars, FpRing(p));
}

namespace {

std::string monomial_string(const MonomialKey& k) {
  std::string s;
  const bool indexed = k.nvars() > 1;
  auto emit = [&](char sym, int idx, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += sym;
    if (indexed) s += std::to_string(idx);
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (int i = 0; i < k.nvars(); ++i) emit('x', i + 1, k.xexp[i]);
  for (int i = 0; i < k.nvars(); ++i) emit('d', i + 1, k.dexp[i]);
  return s;
}

// Coefficient rendering: magnitude string plus extracted sign.
struct CoeffText {
  std::string magnitude;
  bool negative;
  bool is_unit;  // magnitude == 1, so it can be omitted before a monomial
};

CoeffText coeff_text(const Rational& c) {
  Rational a = c.abs();
  return {a.to_string(), c.sign() < 0, a == Rational(1L)};
}

CoeffText coeff_text(const FpElem& c) {
  return {c.to_string(), false, c.value() == 1};
}

}  // namespace

template <class Ring>
std::string to_string(const WeylElement<Ring>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  // Terms from greatest monomial down.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    CoeffText ct = coeff_text(c);
    if (out.empty()) {
      if (ct.negative) out += "-";
    } else {
      out += ct.negative ? " - " : " + ";
    }
    std::string mono = monomial_string(key);
    if (mono.empty()) {
      out += ct.magnitude;
    } else if (ct.is_unit) {
      out += mono;
    } else {
      out += ct.magnitude + "*" + mono;
    }
  }
  return out;
}

template WeylQ evaluate(const OpExpr&, int, RationalRing);
template WeylFp evaluate(const OpExpr&, int, FpRing);
template std::string to_string(const WeylQ&);
template std::string to_string(const WeylFp&);

}  // namespace weylcent
