#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylcent/weyl.hpp"

namespace weylcent {

// Abstract syntax of an operator expression. Products keep written order;
// the algebra is noncommutative.
struct OpExpr {
  enum class Kind { Sum, Product, Power, Var, Lit };

  Kind kind = Kind::Lit;
  std::vector<OpExpr> children;  // Sum, Product; Power uses children[0]
  std::vector<int> signs;        // Sum: +1 / -1 per child
  unsigned exponent = 0;         // Power
  bool is_deriv = false;         // Var: d_i vs x_i
  int var_index = 0;             // Var: 1-based
  BigInt num = 0, den = 1;       // Lit
  std::size_t pos = 0;           // source offset, for diagnostics
};

// Grammar:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := "(" expr ")" | var | lit
//   var    := "x" | "d" (when nvars = 1) | "x"uint | "d"uint (1-based)
//   lit    := uint | uint "/" uint
// Explicit "*" is required; whitespace between tokens is insignificant.
// Variable indices are validated against nvars here.
OpExpr parse_expression(std::string_view text, int nvars);

// Evaluates the AST in A_nvars over the given ring, multiplying factors in
// written order. Over F_p, "/" literals are rejected (BadLiteral) and integer
// literals are reduced mod p.
template <class Ring>
WeylElement<Ring> evaluate(const OpExpr& ast, int nvars, Ring ring);

WeylQ parse_rational(std::string_view text, int nvars);
WeylFp parse_fp(std::string_view text, int nvars, Prime p);

// Canonical form: monomials in graded-lex descending order, "0" for zero.
// parse(to_string(a)) == a.
template <class Ring>
std::string to_string(const WeylElement<Ring>& a);

}  // namespace weylcent
