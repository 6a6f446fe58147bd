#include "drw/cli/expression.hpp"

#include <cctype>
#include <sstream>

#include "drw/product.hpp"

namespace drw::cli {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

EvalError::EvalError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}

namespace {

struct Token {
  enum class Kind { Int, Letter, Symbol, End };
  Kind kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (c == 'V' || c == 'F' || c == 'd' || c == 'e' || c == 'X') {
      out.push_back({Token::Kind::Letter, std::string(1, c), pos});
      advance(1);
    } else if (std::string_view("()[]^*+-;,{}/").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), pos});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
    }
  }
  out.push_back({Token::Kind::End, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Expr> parse_all() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(t.kind == Token::Kind::End ? message + " at end of input" : message, t.pos.line, t.pos.column);
  }

  bool at_symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
  bool at_letter(char c) const { return peek().kind == Token::Kind::Letter && peek().text[0] == c; }

  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    next();
  }

  BigInt integer() {
    if (peek().kind != Token::Kind::Int) fail("expected an integer");
    return BigInt(next().text);
  }

  std::uint64_t small_integer(const char* what) {
    if (peek().kind != Token::Kind::Int) fail(std::string("expected ") + what);
    const Token& t = peek();
    BigInt v(t.text);
    if (!v.fits_ulong_p()) fail(std::string(what) + " is too large");
    next();
    return v.get_ui();
  }

  Rational rational() {
    BigInt num = integer();
    BigInt den = 1;
    if (at_symbol('/')) {
      next();
      SourcePos at = peek().pos;
      den = integer();
      if (den == 0) throw ParseError("zero denominator", at.line, at.column);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  static std::unique_ptr<Expr> node(Expr::Kind kind, SourcePos pos) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->pos = pos;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    SourcePos start = peek().pos;
    std::unique_ptr<Expr> lhs;
    if (at_symbol('-')) {
      next();
      lhs = node(Expr::Kind::Neg, start);
      lhs->children.push_back(term());
    } else {
      lhs = term();
    }
    while (at_symbol('+') || at_symbol('-')) {
      SourcePos at = peek().pos;
      auto kind = next().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      auto combined = node(kind, at);
      combined->children.push_back(std::move(lhs));
      combined->children.push_back(term());
      lhs = std::move(combined);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (at_symbol('*')) {
      SourcePos at = next().pos;
      auto combined = node(Expr::Kind::Mul, at);
      combined->children.push_back(std::move(lhs));
      combined->children.push_back(factor());
      lhs = std::move(combined);
    }
    return lhs;
  }

  std::unique_ptr<Expr> parenthesized() {
    expect_symbol('(');
    auto e = expr();
    expect_symbol(')');
    return e;
  }

  std::unique_ptr<Expr> factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      auto e = node(Expr::Kind::Integer, t.pos);
      e->integer = integer();
      return e;
    }
    if (at_symbol('(')) return parenthesized();
    if (at_symbol('[')) return teich();
    if (at_letter('V') || at_letter('F')) {
      auto e = node(t.text == "V" ? Expr::Kind::Verschiebung : Expr::Kind::Frobenius, t.pos);
      next();
      if (at_symbol('^')) {
        next();
        e->exponent = small_integer("an exponent");
      }
      e->children.push_back(parenthesized());
      return e;
    }
    if (at_letter('d')) {
      auto e = node(Expr::Kind::Differential, t.pos);
      next();
      e->children.push_back(parenthesized());
      return e;
    }
    if (at_letter('e')) return basic_literal();
    fail(t.kind == Token::Kind::End ? "expected a factor" : "unexpected '" + t.text + "'");
  }

  std::unique_ptr<Expr> teich() {
    auto e = node(Expr::Kind::Teich, peek().pos);
    expect_symbol('[');
    if (!at_letter('X')) fail("expected a variable X<i>");
    next();
    e->variable = small_integer("a variable index");
    expect_symbol(']');
    if (at_symbol('^')) {
      next();
      e->exponent = small_integer("an exponent");
    }
    return e;
  }

  std::unique_ptr<Expr> basic_literal() {
    auto e = node(Expr::Kind::Basic, peek().pos);
    next();
    expect_symbol('(');
    e->integer = integer();
    expect_symbol(';');
    e->weight.push_back(rational());
    while (at_symbol(',')) {
      next();
      e->weight.push_back(rational());
    }
    expect_symbol(';');
    expect_symbol('{');
    if (!at_symbol('}')) {
      e->partition.push_back(small_integer("a partition index"));
      while (at_symbol(',')) {
        next();
        e->partition.push_back(small_integer("a partition index"));
      }
    }
    expect_symbol('}');
    expect_symbol(')');
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Evaluator {
 public:
  Evaluator(const Context& ctx, std::vector<std::string>* warnings) : ctx_(ctx), warnings_(warnings) {}

  DRWElement eval(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Integer: {
        WittScalar eta = WittScalar::from_integer(ctx_.p, ctx_.precision, e.integer);
        if (eta.is_zero() && e.integer != 0) warn(e.pos, "integer literal vanishes modulo p^M");
        return DRWElement::scalar(ctx_, eta);
      }
      case K::Teich: {
        if (e.variable < 1 || e.variable > ctx_.nvars) {
          throw EvalError("unknown variable X" + std::to_string(e.variable) + " (nvars = " +
                              std::to_string(ctx_.nvars) + ")",
                          e.pos);
        }
        return DRWElement::teichmuller_monomial(ctx_, WeightFunction::unit(ctx_.p, ctx_.nvars, e.variable - 1, e.exponent));
      }
      case K::Verschiebung:
      case K::Frobenius: {
        DRWElement x = eval(*e.children[0]);
        for (std::uint64_t k = 0; k < e.exponent; ++k) {
          std::size_t before = x.size();
          x = e.kind == K::Verschiebung ? verschiebung(x) : frobenius(x);
          if (x.size() < before) warn(e.pos, "terms lost to the truncation at p^M");
        }
        return x;
      }
      case K::Differential: {
        DRWElement x = eval(*e.children[0]);
        std::size_t live = 0;
        for (const auto& [key, eta] : x.terms()) {
          if (!key.weight().is_zero() && !key.lower_interval_empty()) ++live;
        }
        DRWElement dx = differential(x);
        if (dx.size() < live) warn(e.pos, "terms lost to the truncation at p^M");
        return dx;
      }
      case K::Add: return eval(*e.children[0]) + eval(*e.children[1]);
      case K::Sub: return eval(*e.children[0]) - eval(*e.children[1]);
      case K::Neg: return -eval(*e.children[0]);
      case K::Mul: return mul(eval(*e.children[0]), eval(*e.children[1]));
      case K::Basic: return basic(e);
    }
    throw std::logic_error("unhandled expression kind");
  }

 private:
  void warn(SourcePos pos, const std::string& message) {
    if (warnings_) warnings_->push_back(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message);
  }

  DRWElement basic(const Expr& e) {
    if (e.weight.size() != ctx_.nvars) {
      throw EvalError("basic element has " + std::to_string(e.weight.size()) + " weight entries, expected " +
                          std::to_string(ctx_.nvars),
                      e.pos);
    }
    WeightFunction a;
    try {
      a = WeightFunction::from_rationals(ctx_.p, e.weight);
    } catch (const std::exception& ex) {
      throw EvalError(ex.what(), e.pos);
    }
    IndexSet idx;
    for (std::size_t i : e.partition) {
      if (i < 1 || i > ctx_.nvars) throw EvalError("partition index " + std::to_string(i) + " out of range", e.pos);
      idx.push_back(i - 1);
    }
    Partition I;
    try {
      I = Partition::of(a, std::move(idx));
    } catch (const std::exception& ex) {
      throw EvalError(ex.what(), e.pos);
    }
    WittScalar eta = WittScalar::from_integer(ctx_.p, ctx_.precision, e.integer);
    return DRWElement::basic(ctx_, {eta, std::move(a), std::move(I)});
  }

  const Context& ctx_;
  std::vector<std::string>* warnings_;
};

}  // namespace

std::unique_ptr<Expr> parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

DRWElement evaluate(const Expr& e, const Context& ctx, std::vector<std::string>* warnings) {
  return Evaluator(ctx, warnings).eval(e);
}

DRWElement evaluate(std::string_view text, const Context& ctx, std::vector<std::string>* warnings) {
  return evaluate(*parse(text), ctx, warnings);
}

std::string render(const DRWElement& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace drw::cli
