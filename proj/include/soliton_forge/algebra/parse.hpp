#pragma once

#include "soliton_forge/algebra/scalar_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  /// Zero-based character offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses integers, symbols, + - * / ^ and parentheses, whitespace-insensitive.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Unary minus binds looser than '^', so -a^2 is -(a^2).
ScalarExpr parse_expr(std::string_view text);

}  // namespace sforge
