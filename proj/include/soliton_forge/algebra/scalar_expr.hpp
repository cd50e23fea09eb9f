#pragma once

#include "soliton_forge/algebra/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sforge {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A named scalar parameter such as `a`, `alpha` or `tau`.
class Sym {
 public:
  /// Throws std::invalid_argument unless `name` is an identifier.
  explicit Sym(std::string name);

  const std::string& name() const { return name_; }

  friend auto operator<=>(const Sym&, const Sym&) = default;

 private:
  std::string name_;
};

bool is_identifier(std::string_view text);

class ScalarExpr;
using Bindings = std::map<Sym, ScalarExpr>;

/// Canonical rational function num/den over Q.
///
/// Canonical form: num and den are coprime as polynomials (full multivariate
/// gcd), both carry integer coefficients whose combined gcd is 1, and the
/// grlex-leading coefficient of den is positive. Zero is 0/1. Two values are
/// equal exactly when their (num, den) pairs are identical.
class ScalarExpr {
 public:
  ScalarExpr() : den_(1) {}
  ScalarExpr(long value);             // NOLINT(google-explicit-constructor)
  ScalarExpr(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit ScalarExpr(const Sym& symbol);

  /// Throws DivisionByZero when den is the zero polynomial.
  static ScalarExpr fraction(const Poly& num, const Poly& den);
  static ScalarExpr symbol(const std::string& name) { return ScalarExpr(Sym(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The rational value when the expression contains no symbols.
  std::optional<Rational> constant_value() const;
  std::set<std::string> symbols() const;

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& other);
  ScalarExpr& operator-=(const ScalarExpr& other);
  ScalarExpr& operator*=(const ScalarExpr& other);
  /// Throws DivisionByZero when other is zero.
  ScalarExpr& operator/=(const ScalarExpr& other);

  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b) { return a *= b; }
  friend ScalarExpr operator/(ScalarExpr a, const ScalarExpr& b) { return a /= b; }

  /// Negative exponents invert; throws DivisionByZero for 0^-k.
  ScalarExpr pow(int exponent) const;

  /// Simultaneous substitution. Throws DivisionByZero when the denominator
  /// vanishes identically under the bindings.
  ScalarExpr substitute(const Bindings& bindings) const;

  /// Rendering in the expression grammar; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;

 private:
  ScalarExpr(Poly num, Poly den, bool canonical);
  void canonicalize();

  Poly num_;
  Poly den_;
};

// Named wrappers matching the engine's operation vocabulary.
inline ScalarExpr add(const ScalarExpr& x, const ScalarExpr& y) { return x + y; }
inline ScalarExpr mul(const ScalarExpr& x, const ScalarExpr& y) { return x * y; }
inline ScalarExpr div(const ScalarExpr& x, const ScalarExpr& y) { return x / y; }
inline ScalarExpr substitute(const ScalarExpr& x, const Bindings& b) { return x.substitute(b); }
inline bool is_zero(const ScalarExpr& x) { return x.is_zero(); }

}  // namespace sforge
