#include "soliton_forge/algebra/scalar_expr.hpp"

#include <cctype>

namespace sforge {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  const auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && text.front() != '_') return false;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_') return false;
  }
  return true;
}

Sym::Sym(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw std::invalid_argument("invalid symbol name '" + name_ + "'");
}

ScalarExpr::ScalarExpr(long value) : num_(value), den_(1) {}

ScalarExpr::ScalarExpr(const Rational& value)
    : num_(Rational(value.get_num())), den_(Rational(value.get_den())) {}

ScalarExpr::ScalarExpr(const Sym& symbol) : num_(Poly::variable(symbol.name())), den_(1) {}

ScalarExpr::ScalarExpr(Poly num, Poly den, bool canonical) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("division by zero");
  if (!canonical) canonicalize();
}

ScalarExpr ScalarExpr::fraction(const Poly& num, const Poly& den) { return {num, den, false}; }

void ScalarExpr::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  // Integer coefficients with combined content 1, positive leading denominator.
  const Rational cn = num_.content();
  const Rational cd = den_.content();
  Integer top;
  Integer bottom;
  mpz_gcd(top.get_mpz_t(), cn.get_num_mpz_t(), cd.get_num_mpz_t());
  mpz_lcm(bottom.get_mpz_t(), cn.get_den_mpz_t(), cd.get_den_mpz_t());
  Rational scale(bottom, top);
  scale.canonicalize();
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }
}

std::optional<Rational> ScalarExpr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term() / den_.constant_term();
}

std::set<std::string> ScalarExpr::symbols() const {
  std::set<std::string> out;
  for (const auto& v : num_.variables()) out.insert(v);
  for (const auto& v : den_.variables()) out.insert(v);
  return out;
}

ScalarExpr ScalarExpr::operator-() const { return {-num_, den_, true}; }

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    *this = ScalarExpr(num_ + other.num_, den_, false);
  } else {
    *this = ScalarExpr(num_ * other.den_ + other.num_ * den_, den_ * other.den_, false);
  }
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& other) { return *this += -other; }

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& other) {
  if (is_zero() || other.is_zero()) return *this = ScalarExpr();
  *this = ScalarExpr(num_ * other.num_, den_ * other.den_, false);
  return *this;
}

ScalarExpr& ScalarExpr::operator/=(const ScalarExpr& other) {
  if (other.is_zero()) throw DivisionByZero("division by zero");
  *this = ScalarExpr(num_ * other.den_, den_ * other.num_, false);
  return *this;
}

ScalarExpr ScalarExpr::pow(int exponent) const {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned>(exponent);
    return {num_.pow(e), den_.pow(e), false};
  }
  if (is_zero()) throw DivisionByZero("zero raised to a negative power");
  const auto e = static_cast<unsigned>(-exponent);
  return {den_.pow(e), num_.pow(e), false};
}

namespace {

ScalarExpr evaluate(const Poly& p, const Bindings& bindings) {
  ScalarExpr total;
  for (const auto& [monomial, coeff] : p.terms()) {
    ScalarExpr term(coeff);
    for (const auto& [name, exp] : monomial.factors()) {
      const auto it = bindings.find(Sym(name));
      const ScalarExpr base = it == bindings.end() ? ScalarExpr::symbol(name) : it->second;
      term *= base.pow(static_cast<int>(exp));
    }
    total += term;
  }
  return total;
}

}  // namespace

ScalarExpr ScalarExpr::substitute(const Bindings& bindings) const {
  if (bindings.empty() || is_constant()) return *this;
  const ScalarExpr top = evaluate(num_, bindings);
  const ScalarExpr bottom = evaluate(den_, bindings);
  if (bottom.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return top / bottom;
}

std::string ScalarExpr::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  std::string top = num_.to_string();
  if (num_.term_count() > 1) top = "(" + top + ")";
  std::string bottom = den_.to_string();
  const bool bare = den_.is_constant() ||
                    (den_.is_monomial() && den_.leading_coefficient() == 1 &&
                     den_.leading_monomial().factors().size() == 1);
  if (!bare) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace sforge
