#include "soliton_forge/algebra/parse.hpp"

#include <cctype>

namespace sforge {
namespace {

constexpr int kMaxExponent = 1024;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarExpr parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    ScalarExpr value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  ScalarExpr expr() {
    ScalarExpr value = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr value = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        const ScalarExpr divisor = unary();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  ScalarExpr unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ScalarExpr power() {
    ScalarExpr base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const bool negative = accept('-');
    skip_space();
    const std::size_t at = pos_;
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected integer exponent after '^'");
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) throw ParseError("exponent too large", at);
    const int exponent = negative ? -std::stoi(digits) : std::stoi(digits);
    if (exponent < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", at);
    return base.pow(exponent);
  }

  ScalarExpr primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ScalarExpr(Rational(take_digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += text_[pos_++];
      }
      return ScalarExpr::symbol(name);
    }
    if (accept('(')) {
      ScalarExpr inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string take_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    return digits;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace sforge
