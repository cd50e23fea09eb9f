#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Terms are kept in descending graded-lexicographic order, where the
// lexicographic tie-break walks symbol names in ascending (byte) order.
// That order is used everywhere a "leading" term is needed, including the
// sign normalization of ScalarExpr denominators.

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sforge {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& value);

/// Product of symbol powers; factors sorted by symbol name, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent_of(std::string_view name) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(std::string_view name) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// -1, 0 or 1 as a is smaller than, equal to or greater than b in grlex.
int compare_grlex(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_grlex(a, b) > 0;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant);             // NOLINT(google-explicit-constructor)

  static Poly variable(const std::string& name);
  static Poly term(const Monomial& monomial, const Rational& coefficient);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the monomial 1.
  Rational constant_term() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  unsigned total_degree() const;

  std::vector<std::string> variables() const;
  unsigned degree_in(const std::string& name) const;
  /// Coefficients in `name`, index = power; the coefficients do not contain `name`.
  std::vector<Poly> coefficients_in(const std::string& name) const;
  static Poly from_coefficients(const std::string& name, const std::vector<Poly>& coefficients);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& factor) const;
  Poly pow(unsigned exponent) const;

  /// Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;
  /// this/content, sign fixed so the leading coefficient is positive.
  Poly primitive() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  TermMap terms_;
};

/// a / b where b is known to divide a; throws std::invalid_argument otherwise.
Poly divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized with `primitive()`; gcd(0, 0) = 0.
///
/// Recursive primitive pseudo-remainder sequence on the first symbol, so the
/// result is a true multivariate gcd, not only a content/monomial one.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace sforge
