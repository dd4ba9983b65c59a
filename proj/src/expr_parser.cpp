#include "leibcas/expr_parser.hpp"

#include <cctype>

#include "leibcas/errors.hpp"

namespace leibcas {

namespace {

enum class Tok { end, plus, minus, star, lbracket, rbracket, lparen, rparen,
                 comma, dashleft, dashright, generator, number };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;     // number literal
  std::uint32_t index;  // generator index
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("parse error at position " + std::to_string(current_.pos) +
                      ": " + what);
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_.pos = i_;
    current_.text.clear();
    if (i_ >= text_.size()) {
      current_.kind = Tok::end;
      return;
    }
    const char c = text_[i_];
    switch (c) {
      case '+': current_.kind = Tok::plus; ++i_; return;
      case '*': current_.kind = Tok::star; ++i_; return;
      case '[': current_.kind = Tok::lbracket; ++i_; return;
      case ']': current_.kind = Tok::rbracket; ++i_; return;
      case '(': current_.kind = Tok::lparen; ++i_; return;
      case ')': current_.kind = Tok::rparen; ++i_; return;
      case ',': current_.kind = Tok::comma; ++i_; return;
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '|') {
          current_.kind = Tok::dashleft;  // -|
          i_ += 2;
          return;
        }
        current_.kind = Tok::minus;
        ++i_;
        return;
      case '|':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
          current_.kind = Tok::dashright;  // |-
          i_ += 2;
          return;
        }
        throw usage_error("parse error at position " + std::to_string(i_) +
                          ": lone '|'");
      default: break;
    }
    if (c == 'x' && i_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
      std::size_t j = i_ + 1;
      unsigned long v = 0;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        v = v * 10 + static_cast<unsigned long>(text_[j] - '0');
        ++j;
      }
      if (v == 0) {
        throw usage_error("parse error at position " + std::to_string(i_) +
                          ": generators start at x1");
      }
      current_.kind = Tok::generator;
      current_.index = static_cast<std::uint32_t>(v - 1);
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[j])) || text_[j] == '/')) {
        ++j;
      }
      current_.kind = Tok::number;
      current_.text = text_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    throw usage_error("parse error at position " + std::to_string(i_) +
                      ": unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_{};
};

// Small AST; letter counts bound the normal-form degree before expansion.
struct Ast {
  enum class Op { gen, bracket, dleft, dright, add, sub, smul } op;
  std::uint32_t index = 0;
  Scalar factor;
  std::vector<Ast> args;

  std::size_t letters() const {
    if (op == Op::gen) return 1;
    if (op == Op::add || op == Op::sub) {
      std::size_t m = 0;
      for (const Ast& a : args) m = std::max(m, a.letters());
      return m;
    }
    if (op == Op::smul) return args[0].letters();
    return args[0].letters() + args[1].letters();
  }

  bool uses_dialg_product() const {
    if (op == Op::dleft || op == Op::dright) return true;
    for (const Ast& a : args) {
      if (a.uses_dialg_product()) return true;
    }
    return false;
  }
};

class Parser {
 public:
  Parser(const Field& f, Lexer& lex) : field_(f), lex_(lex) {}

  Ast expr() {
    Ast acc = term();
    for (;;) {
      if (lex_.peek().kind == Tok::plus) {
        lex_.take();
        Ast rhs = term();
        acc = Ast{Ast::Op::add, 0, Scalar::zero(field_), {std::move(acc), std::move(rhs)}};
      } else if (lex_.peek().kind == Tok::minus) {
        lex_.take();
        Ast rhs = term();
        acc = Ast{Ast::Op::sub, 0, Scalar::zero(field_), {std::move(acc), std::move(rhs)}};
      } else {
        return acc;
      }
    }
  }

  Ast term() {
    bool negate = false;
    while (lex_.peek().kind == Tok::minus) {  // leading sign
      lex_.take();
      negate = !negate;
    }
    Ast t;
    if (lex_.peek().kind == Tok::number) {
      Token num = lex_.take();
      Scalar c = Scalar::parse(field_, num.text);
      if (lex_.peek().kind == Tok::star) {
        lex_.take();
        Ast inner = prod();
        t = Ast{Ast::Op::smul, 0, std::move(c), {std::move(inner)}};
      } else {
        lex_.fail("a scalar must multiply a monomial (use c*expr)");
      }
    } else {
      t = prod();
    }
    if (negate) {
      t = Ast{Ast::Op::smul, 0, -Scalar::one(field_), {std::move(t)}};
    }
    return t;
  }

  Ast prod() {
    Ast acc = atom();
    for (;;) {
      if (lex_.peek().kind == Tok::dashleft) {
        lex_.take();
        Ast rhs = atom();
        acc = Ast{Ast::Op::dleft, 0, Scalar::zero(field_), {std::move(acc), std::move(rhs)}};
      } else if (lex_.peek().kind == Tok::dashright) {
        lex_.take();
        Ast rhs = atom();
        acc = Ast{Ast::Op::dright, 0, Scalar::zero(field_), {std::move(acc), std::move(rhs)}};
      } else {
        return acc;
      }
    }
  }

  Ast atom() {
    const Token t = lex_.peek();
    if (t.kind == Tok::generator) {
      lex_.take();
      return Ast{Ast::Op::gen, t.index, Scalar::zero(field_), {}};
    }
    if (t.kind == Tok::lbracket) {
      lex_.take();
      Ast lhs = expr();
      if (lex_.peek().kind != Tok::comma) lex_.fail("expected ',' in bracket");
      lex_.take();
      Ast rhs = expr();
      if (lex_.peek().kind != Tok::rbracket) lex_.fail("expected ']'");
      lex_.take();
      return Ast{Ast::Op::bracket, 0, Scalar::zero(field_), {std::move(lhs), std::move(rhs)}};
    }
    if (t.kind == Tok::lparen) {
      lex_.take();
      Ast inner = expr();
      if (lex_.peek().kind != Tok::rparen) lex_.fail("expected ')'");
      lex_.take();
      return inner;
    }
    lex_.fail("expected a generator, bracket, or parenthesized expression");
  }

 private:
  Field field_;
  Lexer& lex_;
};

FreeElement eval_free(const Field& f, const Ast& a) {
  switch (a.op) {
    case Ast::Op::gen:
      return FreeElement::generator(f, a.index);
    case Ast::Op::bracket:
      return free_bracket(eval_free(f, a.args[0]), eval_free(f, a.args[1]));
    case Ast::Op::add:
      return eval_free(f, a.args[0]) + eval_free(f, a.args[1]);
    case Ast::Op::sub:
      return eval_free(f, a.args[0]) - eval_free(f, a.args[1]);
    case Ast::Op::smul:
      return eval_free(f, a.args[0]).scaled(a.factor);
    default:
      throw usage_error("dialgebra products are not valid in a bracket-only "
                        "expression; pass the dialgebra flag");
  }
}

DialgElement eval_dialg(const Field& f, const Ast& a) {
  switch (a.op) {
    case Ast::Op::gen:
      return DialgElement::generator(f, a.index);
    case Ast::Op::bracket:
      return dialg_bracket(eval_dialg(f, a.args[0]), eval_dialg(f, a.args[1]));
    case Ast::Op::dleft:
      return dprod_left(eval_dialg(f, a.args[0]), eval_dialg(f, a.args[1]));
    case Ast::Op::dright:
      return dprod_right(eval_dialg(f, a.args[0]), eval_dialg(f, a.args[1]));
    case Ast::Op::add:
      return eval_dialg(f, a.args[0]) + eval_dialg(f, a.args[1]);
    case Ast::Op::sub:
      return eval_dialg(f, a.args[0]) - eval_dialg(f, a.args[1]);
    case Ast::Op::smul:
      return eval_dialg(f, a.args[0]).scaled(a.factor);
  }
  throw invariant_violation("unreachable expression op");
}

}  // namespace

ParsedExpr parse_expression(const Field& f, const std::string& text,
                            bool force_dialgebra, std::size_t degree_cap) {
  Lexer lex(text);
  Parser parser(f, lex);
  Ast ast = parser.expr();
  if (lex.peek().kind != Tok::end) lex.fail("trailing input");
  if (degree_cap != 0 && ast.letters() > degree_cap) {
    throw usage_error("expression degree " + std::to_string(ast.letters()) +
                      " exceeds the cap of " + std::to_string(degree_cap) +
                      " (pass --force to lift it)");
  }
  const bool dialg = force_dialgebra || ast.uses_dialg_product();
  if (dialg) return ParsedExpr{eval_dialg(f, ast), true};
  return ParsedExpr{eval_free(f, ast), false};
}

}  // namespace leibcas
