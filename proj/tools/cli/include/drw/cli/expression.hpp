#pragma once

// Textual expressions for de Rham-Witt forms:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | teich | 'V' ['^' INT] '(' expr ')' | 'F' ['^' INT] '(' expr ')'
//           | 'd' '(' expr ')' | elit | '(' expr ')'
//   teich  := '[' 'X' INT ']' ['^' INT]
//   elit   := 'e' '(' INT ';' rational (',' rational)* ';' '{' [INT (',' INT)*] '}' ')'
//
// Variables and partition indices are 1-based.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drw/element.hpp"

namespace drw::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expr {
  enum class Kind { Integer, Teich, Verschiebung, Frobenius, Differential, Add, Sub, Mul, Neg, Basic };

  Kind kind;
  SourcePos pos;
  std::vector<std::unique_ptr<Expr>> children;
  BigInt integer;                // Integer literal, or eta of a basic literal
  std::size_t variable = 0;      // Teich: 1-based variable
  std::uint64_t exponent = 1;    // Teich power, or V^k / F^k
  std::vector<Rational> weight;  // Basic literal
  std::vector<std::size_t> partition;
};

std::unique_ptr<Expr> parse(std::string_view text);

/// Semantic problems found while evaluating (wrong variable, bad weight...).
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// Evaluates in the ring fixed by ctx. Terms lost to the truncation at p^M are
/// reported through `warnings` when it is non-null.
DRWElement evaluate(const Expr& e, const Context& ctx, std::vector<std::string>* warnings = nullptr);

DRWElement evaluate(std::string_view text, const Context& ctx, std::vector<std::string>* warnings = nullptr);

/// The canonical textual form; parse(render(x)) evaluates back to x.
std::string render(const DRWElement& x);

}  // namespace drw::cli
