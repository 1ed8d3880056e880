#pragma once

// Input language of the command line tool.
//
//   scalar   := ['-'] term (('+' | '-') term)*
//   term     := rational | [rational] 'r2'
//   rational := INT ['/' INT]
//   expr     := power ('*' power)*
//   power    := atom ('^' ['-'] INT)*
//   atom     := '[' scalar ',' scalar ',' scalar [',' scalar] ']'
//             | '(' scalar ',' scalar ')'
//             | IDENT '(' [expr (',' expr)*] ')'
//             | '(' expr ')'
//             | scalar
//
// `r2` stands for sqrt 2. Three-entry brackets are elements of G, four-entry
// ones elements of G'; both are canonicalized while parsing.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilint/gprime.hpp"
#include "nilint/group.hpp"
#include "nilint/interp.hpp"
#include "nilint/qfield.hpp"

namespace nilint {

enum class TokenKind {
  Int,
  Slash,
  R2,
  Plus,
  Minus,
  Star,
  Caret,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Ident,
  End,
};

const char* token_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset;
};

// Always ends with an End token at offset input.size(). Throws ParseError on
// a character outside the language.
std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ScalarLit {
  QuadRat value;
};
struct GLit {
  GElem value;
};
struct GPLit {
  GPrimeElem value;
};
struct PointLit {
  EPoint value;
};
struct Mul {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Pow {
  ExprPtr base;
  long exponent;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<ScalarLit, GLit, GPLit, PointLit, Mul, Pow, Call> node;
};

// Structural equality of trees.
bool operator==(const Expr& a, const Expr& b);

QuadRat parse_scalar(std::string_view input);
QuadRat parse_scalar(const std::vector<Token>& tokens);
Expr parse_expr(std::string_view input);
Expr parse_expr(const std::vector<Token>& tokens);

// Canonical concrete syntax; parse_expr(print(e)) == e.
std::string print(const Expr& e);

Value eval(const Expr& e);

}  // namespace nilint
