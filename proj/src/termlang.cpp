#include "nilint/termlang.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <initializer_list>

#include "nilint/errors.hpp"

namespace nilint {

const char* token_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Int: return "integer";
    case TokenKind::Slash: return "'/'";
    case TokenKind::R2: return "'r2'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Ident: return "identifier";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

// ------------------------------------------------------------------- lexer

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string describe_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", u);
  return buf;
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < input.size() &&
             std::isdigit(static_cast<unsigned char>(input[i])))
        ++i;
      out.push_back({TokenKind::Int, std::string(input.substr(start, i - start)),
                     start});
      continue;
    }
    if (ident_start(c)) {
      while (i < input.size() && ident_char(input[i])) ++i;
      std::string word(input.substr(start, i - start));
      out.push_back(
          {word == "r2" ? TokenKind::R2 : TokenKind::Ident, word, start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '/': kind = TokenKind::Slash; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default:
        throw ParseError("unexpected character " + describe_char(c), start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", input.size()});
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

constexpr int kMaxDepth = 200;

const std::vector<std::string> kAtomStart = {
    "integer", "'r2'", "'-'", "'['", "'('", "identifier"};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  QuadRat whole_scalar() {
    QuadRat s = scalar();
    expect_end();
    return s;
  }

  Expr whole_expr() {
    Expr e = expr();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found =
        t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
    std::string msg = what + ", found " + found;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i)
        msg += (i ? ", " : "") + expected[i];
      msg += ")";
    }
    throw ParseError(msg, t.offset, std::move(expected));
  }

  const Token& expect(TokenKind k) {
    if (!at(k)) fail("syntax error", {token_name(k)});
    return advance();
  }

  void expect_end() {
    if (!at(TokenKind::End)) fail("unexpected trailing input", {"end of input"});
  }

  Integer integer(const Token& t) const {
    Integer n;
    n.set_str(t.lexeme, 10);
    return n;
  }

  Rational rational() {
    const Token& n = expect(TokenKind::Int);
    Integer num = integer(n);
    if (!at(TokenKind::Slash)) return Rational(num);
    advance();
    const Token& d = expect(TokenKind::Int);
    Integer den = integer(d);
    if (den == 0) throw ParseError("zero denominator", d.offset);
    return Rational(num, den);
  }

  QuadRat term() {
    if (at(TokenKind::R2)) {
      advance();
      return QuadRat::sqrt2();
    }
    if (!at(TokenKind::Int)) fail("expected a number", {"integer", "'r2'"});
    Rational coeff = rational();
    if (at(TokenKind::R2)) {
      advance();
      return {Rational(0), coeff};
    }
    return coeff;
  }

  QuadRat scalar() {
    bool negate = false;
    if (at(TokenKind::Minus)) {
      advance();
      negate = true;
    }
    QuadRat s = term();
    if (negate) s = -s;
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      bool minus = advance().kind == TokenKind::Minus;
      QuadRat t = term();
      s = minus ? s - t : s + t;
    }
    return s;
  }

  struct DepthGuard {
    DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth)
        throw ParseError("nesting too deep", p.peek().offset);
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = power();
    while (at(TokenKind::Star)) {
      advance();
      Expr rhs = power();
      lhs = Expr{Mul{std::make_shared<const Expr>(std::move(lhs)),
                     std::make_shared<const Expr>(std::move(rhs))}};
    }
    return lhs;
  }

  Expr power() {
    Expr base = atom();
    while (at(TokenKind::Caret)) {
      advance();
      bool negative = false;
      if (at(TokenKind::Minus)) {
        advance();
        negative = true;
      }
      const Token& t = expect(TokenKind::Int);
      long n = 0;
      auto [ptr, ec] =
          std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), n);
      if (ec != std::errc() || ptr != t.lexeme.data() + t.lexeme.size())
        throw ParseError("exponent out of range", t.offset);
      base = Expr{Pow{std::make_shared<const Expr>(std::move(base)),
                      negative ? -n : n}};
    }
    return base;
  }

  Expr element() {
    std::size_t open = expect(TokenKind::LBracket).offset;
    std::vector<QuadRat> entries;
    std::size_t last = peek().offset;
    entries.push_back(scalar());
    while (at(TokenKind::Comma)) {
      advance();
      last = peek().offset;
      entries.push_back(scalar());
    }
    if (!at(TokenKind::RBracket)) fail("syntax error", {"','", "']'"});
    advance();
    if (entries.size() == 3) return Expr{GLit{{entries[0], entries[1], entries[2]}}};
    if (entries.size() == 4) {
      if (sign(entries[3]) != 1) throw ParseError("x must be positive", last);
      return Expr{GPLit{{entries[0], entries[1], entries[2], entries[3]}}};
    }
    throw ParseError("element literal needs 3 or 4 entries", open);
  }

  Expr call() {
    std::string name = advance().lexeme;
    expect(TokenKind::LParen);
    std::vector<ExprPtr> args;
    if (!at(TokenKind::RParen)) {
      args.push_back(std::make_shared<const Expr>(expr()));
      while (at(TokenKind::Comma)) {
        advance();
        args.push_back(std::make_shared<const Expr>(expr()));
      }
    }
    if (!at(TokenKind::RParen)) fail("syntax error", {"','", "')'"});
    advance();
    return Expr{Call{std::move(name), std::move(args)}};
  }

  Expr parenthesized() {
    advance();
    std::size_t first_at = peek().offset;
    Expr first = expr();
    if (at(TokenKind::Comma)) {
      advance();
      std::size_t second_at = peek().offset;
      Expr second = expr();
      if (!at(TokenKind::RParen)) fail("syntax error", {"')'"});
      advance();
      auto* u = std::get_if<ScalarLit>(&first.node);
      auto* v = std::get_if<ScalarLit>(&second.node);
      if (!u) throw ParseError("point coordinate must be a scalar", first_at);
      if (!v) throw ParseError("point coordinate must be a scalar", second_at);
      return Expr{PointLit{{u->value, v->value}}};
    }
    if (!at(TokenKind::RParen)) fail("syntax error", {"','", "')'"});
    advance();
    return first;
  }

  Expr atom() {
    DepthGuard guard(*this);
    switch (peek().kind) {
      case TokenKind::LBracket: return element();
      case TokenKind::LParen: return parenthesized();
      case TokenKind::Ident: return call();
      case TokenKind::Int:
      case TokenKind::R2:
      case TokenKind::Minus: return Expr{ScalarLit{scalar()}};
      default: fail("expected an expression", kAtomStart);
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

QuadRat parse_scalar(const std::vector<Token>& tokens) {
  return Parser(tokens).whole_scalar();
}

QuadRat parse_scalar(std::string_view input) {
  return parse_scalar(tokenize(input));
}

Expr parse_expr(const std::vector<Token>& tokens) {
  return Parser(tokens).whole_expr();
}

Expr parse_expr(std::string_view input) { return parse_expr(tokenize(input)); }

// ---------------------------------------------------------------- equality

namespace {

struct SameNode {
  bool operator()(const ScalarLit& a, const ScalarLit& b) const {
    return a.value == b.value;
  }
  bool operator()(const GLit& a, const GLit& b) const {
    return a.value == b.value;
  }
  bool operator()(const GPLit& a, const GPLit& b) const {
    return a.value == b.value;
  }
  bool operator()(const PointLit& a, const PointLit& b) const {
    return a.value == b.value;
  }
  bool operator()(const Mul& a, const Mul& b) const {
    return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
  bool operator()(const Pow& a, const Pow& b) const {
    return a.exponent == b.exponent && *a.base == *b.base;
  }
  bool operator()(const Call& a, const Call& b) const {
    if (a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!(*a.args[i] == *b.args[i])) return false;
    return true;
  }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return std::visit(SameNode{}, a.node, b.node);
}

// ----------------------------------------------------------------- printer

namespace {

std::string wrapped(const Expr& e) {
  return std::holds_alternative<Mul>(e.node) ? "(" + print(e) + ")" : print(e);
}

struct Printer {
  std::string operator()(const ScalarLit& s) const {
    return s.value.to_string();
  }
  std::string operator()(const GLit& g) const { return g.value.to_string(); }
  std::string operator()(const GPLit& g) const { return g.value.to_string(); }
  std::string operator()(const PointLit& p) const {
    return p.value.to_string();
  }
  std::string operator()(const Mul& m) const {
    return print(*m.lhs) + "*" + wrapped(*m.rhs);
  }
  std::string operator()(const Pow& p) const {
    return wrapped(*p.base) + "^" + std::to_string(p.exponent);
  }
  std::string operator()(const Call& c) const {
    std::string out = c.name + "(";
    for (std::size_t i = 0; i < c.args.size(); ++i)
      out += (i ? "," : "") + print(*c.args[i]);
    return out + ")";
  }
};

}  // namespace

std::string print(const Expr& e) { return std::visit(Printer{}, e.node); }

// --------------------------------------------------------------- evaluator

namespace {

const char* kind_of(const Value& v) {
  static const char* const names[] = {"scalar", "G element", "G' element",
                                      "point",  "boolean",   "line"};
  return names[v.index()];
}

struct Evaluator {
  Value operator()(const ScalarLit& s) const { return s.value; }
  Value operator()(const GLit& g) const { return g.value; }
  Value operator()(const GPLit& g) const { return g.value; }
  Value operator()(const PointLit& p) const { return p.value; }

  Value operator()(const Mul& m) const {
    Value l = eval(*m.lhs);
    Value r = eval(*m.rhs);
    if (auto* g = std::get_if<GElem>(&l))
      if (auto* h = std::get_if<GElem>(&r)) return g_mul(*g, *h);
    if (auto* g = std::get_if<GPrimeElem>(&l))
      if (auto* h = std::get_if<GPrimeElem>(&r)) return gp_mul(*g, *h);
    throw TypeError(std::string("cannot multiply ") + kind_of(l) + " by " +
                    kind_of(r));
  }

  Value operator()(const Pow& p) const {
    Value b = eval(*p.base);
    if (auto* g = std::get_if<GElem>(&b)) return g_pow(*g, p.exponent);
    if (auto* g = std::get_if<GPrimeElem>(&b)) return gp_pow(*g, p.exponent);
    throw TypeError(std::string("cannot raise ") + kind_of(b) +
                    " to a power");
  }

  Value operator()(const Call& c) const {
    std::vector<Value> args;
    args.reserve(c.args.size());
    for (const auto& a : c.args) args.push_back(eval(*a));
    return definable_reals_demo(c.name, args);
  }
};

}  // namespace

Value eval(const Expr& e) { return std::visit(Evaluator{}, e.node); }

}  // namespace nilint
