#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/multivecfor.hpp"

namespace hyclif {

class ParseError : public Error {
public:
  ParseError(Errc code, int line, int col, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_;
  int col_;
};

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  number,
  ident,
  plus,
  minus,
  star,
  caret,
  lcontract,  // _|
  rcontract,  // |_
  tilde,
  quote,
  bang,       // !  hodge
  bangbang,   // !! inverse hodge
  bangc,      // !c conjugation
  lparen,
  rparen,
  comma,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::lcontract: return "'_|'";
    case Tok::rcontract: return "'|_'";
    case Tok::tilde: return "'~'";
    case Tok::quote: return "'''";
    case Tok::bang: return "'!'";
    case Tok::bangbang: return "'!!'";
    case Tok::bangc: return "'!c'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto alnum = [&](std::size_t k) { return k < src.size() && std::isalnum(static_cast<unsigned char>(src[k])); };
  auto digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    const int start_col = col;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(src.substr(i, len)), line, start_col});
      i += len;
      col += static_cast<int>(len);
    };
    if (digit(i)) {
      std::size_t j = i;
      while (digit(j)) ++j;
      if (j < src.size() && src[j] == '/') {
        if (!digit(j + 1)) throw ParseError(Errc::parse, line, col + static_cast<int>(j - i), "expected digits after '/'");
        ++j;
        while (digit(j)) ++j;
      }
      if (j < src.size() && src[j] == '.')
        throw ParseError(Errc::parse, line, col + static_cast<int>(j - i), "decimal literals are not accepted; write p/q");
      emit(Tok::number, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (alnum(j)) ++j;
      emit(Tok::ident, j - i);
      continue;
    }
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (c) {
      case '+': emit(Tok::plus, 1); continue;
      case '-': emit(Tok::minus, 1); continue;
      case '*': emit(Tok::star, 1); continue;
      case '^': emit(Tok::caret, 1); continue;
      case '~': emit(Tok::tilde, 1); continue;
      case '\'': emit(Tok::quote, 1); continue;
      case '(': emit(Tok::lparen, 1); continue;
      case ')': emit(Tok::rparen, 1); continue;
      case ',': emit(Tok::comma, 1); continue;
      case '_':
        if (next == '|') { emit(Tok::lcontract, 2); continue; }
        break;
      case '|':
        if (next == '_') { emit(Tok::rcontract, 2); continue; }
        break;
      case '!':
        if (next == '!') { emit(Tok::bangbang, 2); continue; }
        // `!c` is conjugation unless the c starts an identifier such as `c1`.
        if (next == 'c' && !alnum(i + 2)) { emit(Tok::bangc, 2); continue; }
        emit(Tok::bang, 1);
        continue;
      default: break;
    }
    throw ParseError(Errc::parse, line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// AST

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    number,     // rational literal
    root2,      // r2
    e,          // e_k
    t,          // θ^k
    s,          // σ_k
    sigma,      // orientation
    variable,
    neg,
    rev,
    gradeinv,
    conj,
    hodge,
    hodgeinv,
    add,
    sub,
    wedge,
    gp,
    lcontract,
    rcontract,
    call,
  };

  Kind kind;
  Rational value;        // number
  int index = 0;         // e/t/s atoms, grade(u, r)
  std::string name;      // variable or call name
  std::vector<ExprPtr> args;
  int line = 1;
  int col = 1;

  bool is_scalar_literal() const {
    switch (kind) {
      case Kind::number:
      case Kind::root2: return true;
      case Kind::neg: return args[0]->is_scalar_literal();
      case Kind::add:
      case Kind::sub:
      case Kind::gp: return args[0]->is_scalar_literal() && args[1]->is_scalar_literal();
      default: return false;
    }
  }
};

// Structural equality; positions are ignored.
inline bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.index != b.index || a.name != b.name || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser
//
// Precedence, high to low:
//   unary  - ~ ' ! !! !c   (prefix, right to left)
//   ^
//   _| |_                  (left associative, same level)
//   *
//   + -
// Juxtaposition is not a product. The only exception is a coefficient: a
// scalar literal (number, r2, or a parenthesized scalar expression) directly
// followed by an atom, as in `2t1`, `1/2 e2`, `3 r2 e1`, `(1+r2) e1`. This is
// exactly what canonical output contains, so printed values parse back.

class Parser {
public:
  Parser(std::string_view src, int n, const std::map<std::string, Multivecfor>* vars = nullptr)
      : toks_(tokenize(src)), n_(n), vars_(vars) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    const Token& t = peek();
    if (t.kind == Tok::rparen) fail(t, "unbalanced ')'");
    if (t.kind != Tok::end) {
      if (t.kind == Tok::ident || t.kind == Tok::number || t.kind == Tok::lparen)
        fail(t, "juxtaposition is not a product; use '*'");
      fail(t, std::string("unexpected ") + describe(t.kind));
    }
    return e;
  }

private:
  using K = Expr::Kind;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& what, Errc code = Errc::parse) {
    throw ParseError(code, t.line, t.col, what);
  }

  void expect(Tok k, const char* context) {
    const Token& t = peek();
    if (t.kind != k) {
      if (k == Tok::rparen && t.kind == Tok::end) fail(t, std::string("unbalanced '(' in ") + context);
      fail(t, std::string("expected ") + describe(k) + " in " + context + ", found " + describe(t.kind));
    }
    take();
  }

  static ExprPtr node(K kind, const Token& at, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      lhs = node(op.kind == Tok::plus ? K::add : K::sub, op, {lhs, product()});
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = contraction();
    while (peek().kind == Tok::star) {
      const Token& op = take();
      lhs = node(K::gp, op, {lhs, contraction()});
    }
    return lhs;
  }

  ExprPtr contraction() {
    ExprPtr lhs = wedge();
    while (peek().kind == Tok::lcontract || peek().kind == Tok::rcontract) {
      const Token& op = take();
      lhs = node(op.kind == Tok::lcontract ? K::lcontract : K::rcontract, op, {lhs, wedge()});
    }
    return lhs;
  }

  ExprPtr wedge() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::caret) {
      const Token& op = take();
      lhs = node(K::wedge, op, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    const Token& t = peek();
    K kind;
    switch (t.kind) {
      case Tok::minus: kind = K::neg; break;
      case Tok::tilde: kind = K::rev; break;
      case Tok::quote: kind = K::gradeinv; break;
      case Tok::bang: kind = K::hodge; break;
      case Tok::bangbang: kind = K::hodgeinv; break;
      case Tok::bangc: kind = K::conj; break;
      default: return coefficient();
    }
    take();
    return node(kind, t, {unary()});
  }

  ExprPtr coefficient() {
    ExprPtr e = primary();
    while (e->is_scalar_literal() && peek().kind == Tok::ident && !is_call(peek())) {
      const Token& at = peek();
      e = node(K::gp, at, {e, primary()});
    }
    return e;
  }

  bool is_call(const Token& t) const { return is_call_name(t.text) && peek(1).kind == Tok::lparen; }

  bool known_variable(const std::string& name) const { return vars_ && vars_->count(name); }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        auto e = std::const_pointer_cast<Expr>(node(K::number, t));
        try {
          e->value = parse_rational(t.text);
        } catch (const Error& err) {
          fail(t, err.what());
        }
        return e;
      }
      case Tok::lparen: {
        take();
        ExprPtr e = sum();
        expect(Tok::rparen, "parenthesized expression");
        return e;
      }
      case Tok::ident: return identifier();
      case Tok::rparen: fail(t, "unbalanced ')'");
      case Tok::end: fail(t, "unexpected end of input");
      default: fail(t, std::string("unexpected ") + describe(t.kind));
    }
  }

  ExprPtr identifier() {
    const Token t = take();
    if (is_call_name(t.text) && peek().kind == Tok::lparen) return call(t);
    if (known_variable(t.text)) {
      auto e = std::const_pointer_cast<Expr>(node(K::variable, t));
      e->name = t.text;
      return e;
    }
    if (t.text == "r2") return node(K::root2, t);
    if (t.text == "sigma") return node(K::sigma, t);
    const char head = t.text[0];
    if ((head == 'e' || head == 't' || head == 's') && t.text.size() > 1 &&
        t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      const std::string digits = t.text.substr(1);
      const int limit = head == 's' ? 2 * n_ : n_;
      const long k = digits.size() > 6 ? -1 : std::stol(digits);
      if (k < 1 || k > limit)
        fail(t, "index out of range: " + t.text + " (dimension " + std::to_string(n_) + ")", Errc::out_of_range);
      auto e = std::const_pointer_cast<Expr>(node(head == 'e' ? K::e : head == 't' ? K::t : K::s, t));
      e->index = static_cast<int>(k);
      return e;
    }
    if (is_call_name(t.text)) fail(t, "expected '(' after " + t.text);
    fail(t, "unknown atom '" + t.text + "'", Errc::unknown_name);
  }

public:
  static bool is_call_name(const std::string& s) {
    return s == "ip" || s == "grade" || s == "even" || s == "odd" || s == "dual" || s == "idual";
  }

private:

  ExprPtr call(const Token& name) {
    take();  // (
    auto e = std::const_pointer_cast<Expr>(node(K::call, name));
    e->name = name.text;
    const std::string ctx = "call to " + name.text;
    if (name.text == "grade") {
      e->args.push_back(sum());
      expect(Tok::comma, ctx.c_str());
      const Token& r = peek();
      if (r.kind != Tok::number || r.text.find('/') != std::string::npos)
        fail(r, "grade(u, r) needs a nonnegative integer r");
      take();
      e->index = r.text.size() > 6 ? 1 << 20 : std::stoi(r.text);
    } else if (name.text == "ip") {
      e->args.push_back(sum());
      expect(Tok::comma, ctx.c_str());
      e->args.push_back(sum());
    } else {
      e->args.push_back(sum());
    }
    expect(Tok::rparen, ctx.c_str());
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_;
  const std::map<std::string, Multivecfor>* vars_;
};

// Names a REPL binding may not take: builtins and generator names of any index.
inline bool is_reserved_name(const std::string& s) {
  if (s == "r2" || s == "sigma" || Parser::is_call_name(s)) return true;
  return s.size() > 1 && (s[0] == 'e' || s[0] == 't' || s[0] == 's') &&
         s.find_first_not_of("0123456789", 1) == std::string::npos;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

inline ExprPtr parse(std::string_view src, int n, const std::map<std::string, Multivecfor>* vars = nullptr) {
  return Parser(src, n, vars).parse();
}

// Fully parenthesized source text; parses back to an equal tree.
inline std::string print(const Expr& e) {
  using K = Expr::Kind;
  auto bin = [&](const char* op) { return "(" + print(*e.args[0]) + " " + op + " " + print(*e.args[1]) + ")"; };
  auto un = [&](const char* op) { return std::string(op) + "(" + print(*e.args[0]) + ")"; };
  switch (e.kind) {
    case K::number: return e.value.get_str();
    case K::root2: return "r2";
    case K::e: return "e" + std::to_string(e.index);
    case K::t: return "t" + std::to_string(e.index);
    case K::s: return "s" + std::to_string(e.index);
    case K::sigma: return "sigma";
    case K::variable: return e.name;
    case K::neg: return un("-");
    case K::rev: return un("~");
    case K::gradeinv: return un("'");
    case K::conj: return un("!c");
    case K::hodge: return un("!");
    case K::hodgeinv: return un("!!");
    case K::add: return bin("+");
    case K::sub: return bin("-");
    case K::wedge: return bin("^");
    case K::gp: return bin("*");
    case K::lcontract: return bin("_|");
    case K::rcontract: return bin("|_");
    case K::call:
      if (e.name == "grade") return "grade(" + print(*e.args[0]) + ", " + std::to_string(e.index) + ")";
      if (e.name == "ip") return "ip(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
      return e.name + "(" + print(*e.args[0]) + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Evaluation

using Environment = std::map<std::string, Multivecfor>;

inline Multivecfor eval(const Expr& e, const ContextPtr& ctx, const Environment& env = {}) {
  using K = Expr::Kind;
  auto arg = [&](std::size_t i) { return eval(*e.args[i], ctx, env); };
  switch (e.kind) {
    case K::number: return Multivecfor::scalar(ctx, Scalar(e.value));
    case K::root2: return Multivecfor::scalar(ctx, Scalar::sqrt2());
    case K::e: return Multivecfor::e(ctx, e.index);
    case K::t: return Multivecfor::t(ctx, e.index);
    case K::s: return sigma_basis(ctx->dim())[static_cast<std::size_t>(e.index - 1)].to_multivecfor(ctx);
    case K::sigma: return orientation_sigma(ctx);
    case K::variable: {
      auto it = env.find(e.name);
      if (it == env.end()) throw ParseError(Errc::unknown_name, e.line, e.col, "unknown variable '" + e.name + "'");
      if (it->second.context() && it->second.context()->dim() != ctx->dim())
        throw Error(Errc::context_mismatch, "variable '" + e.name + "' was defined in another dimension");
      return it->second.context() ? it->second : Multivecfor(ctx);
    }
    case K::neg: return -arg(0);
    case K::rev: return reversion(arg(0));
    case K::gradeinv: return grade_involution(arg(0));
    case K::conj: return conjugation(arg(0));
    case K::hodge: return hodge(arg(0));
    case K::hodgeinv: return hodge_inv(arg(0));
    case K::add: return arg(0) + arg(1);
    case K::sub: return arg(0) - arg(1);
    case K::wedge: return wedge(arg(0), arg(1));
    case K::gp: return gp(arg(0), arg(1));
    case K::lcontract: return lcontract(arg(0), arg(1));
    case K::rcontract: return rcontract(arg(0), arg(1));
    case K::call:
      if (e.name == "ip") return Multivecfor::scalar(ctx, bilinear(arg(0), arg(1)));
      if (e.name == "grade") return grade_part(arg(0), e.index);
      if (e.name == "even") return even_part(arg(0));
      if (e.name == "odd") return odd_part(arg(0));
      if (e.name == "dual") return hodge(arg(0));
      if (e.name == "idual") return hodge_inv(arg(0));
      break;
  }
  throw Error(Errc::invalid_argument, "cannot evaluate expression");
}

inline Multivecfor evaluate(std::string_view src, const ContextPtr& ctx, const Environment& env = {}) {
  return eval(*parse(src, ctx->dim(), &env), ctx, env);
}

}  // namespace hyclif
