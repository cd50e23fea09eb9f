#include "soliton_forge/algebra/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sforge {

std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::string name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned total = 0;
  for (const auto& [name, exp] : factors_) total += exp;
  return total;
}

unsigned Monomial::exponent_of(std::string_view name) const {
  for (const auto& [sym, exp] : factors_) {
    if (sym == name) return exp;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [name, exp] : factors_) {
    if (other.exponent_of(name) < exp) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (const auto& [name, exp] : factors_) {
    const unsigned d = divisor.exponent_of(name);
    if (d > exp) throw std::invalid_argument("monomial quotient is not exact");
    if (exp > d) out.factors_.emplace_back(name, exp - d);
  }
  for (const auto& [name, exp] : divisor.factors_) {
    if (exponent_of(name) == 0) throw std::invalid_argument("monomial quotient is not exact");
  }
  return out;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != name) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (const auto& [name, exp] : a.factors_) {
    const unsigned e = std::min(exp, b.exponent_of(name));
    if (e > 0) out.factors_.emplace_back(name, e);
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [name, exp] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out.empty() ? "1" : out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto x = a.factors().begin();
  auto y = b.factors().begin();
  while (x != a.factors().end() && y != b.factors().end()) {
    if (x->first == y->first) {
      if (x->second != y->second) return x->second < y->second ? -1 : 1;
      ++x;
      ++y;
    } else {
      // The symbol that sorts first carries a positive exponent only on one side.
      return x->first < y->first ? 1 : -1;
    }
  }
  if (x != a.factors().end()) return 1;
  if (y != b.factors().end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::variable(const std::string& name) { return term(Monomial::variable(name), 1); }

Poly Poly::term(const Monomial& monomial, const Rational& coefficient) {
  Poly p;
  if (coefficient != 0) p.terms_.emplace(monomial, coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::vector<std::string> Poly::variables() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.insert(f.first);
  }
  return {names.begin(), names.end()};
}

unsigned Poly::degree_in(const std::string& name) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(name));
  return d;
}

std::vector<Poly> Poly::coefficients_in(const std::string& name) const {
  std::vector<Poly> out(degree_in(name) + 1);
  for (const auto& [m, c] : terms_) out[m.exponent_of(name)].add_term(m.without(name), c);
  return out;
}

Poly Poly::from_coefficients(const std::string& name, const std::vector<Poly>& coefficients) {
  Poly out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Monomial power = Monomial::variable(name, static_cast<unsigned>(k));
    for (const auto& [m, c] : coefficients[k].terms_) out.add_term(m * power, c);
  }
  return out;
}

void Poly::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly Poly::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Poly::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  return scaled(1 / c);
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
  return g;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += sforge::to_string(magnitude);
    } else {
      if (magnitude != 1) out += sforge::to_string(magnitude) + '*';
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.constant_term());
  Poly quotient;
  Poly rest = a;
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_coeff = b.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& m = rest.leading_monomial();
    if (!lead.divides(m)) throw std::invalid_argument("polynomial division is not exact");
    const Poly step = Poly::term(m.quotient(lead), rest.leading_coefficient() / lead_coeff);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

namespace {

using Coefficients = std::vector<Poly>;

void trim(Coefficients& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly gcd_of(const Coefficients& polys) {
  Poly g;
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return Poly(1);
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in the main variable.
Coefficients pseudo_remainder(Coefficients a, const Coefficients& b) {
  const std::size_t m = b.size() - 1;
  const Poly& lead = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= m) {
    const std::size_t k = a.size() - 1;
    const Poly top = a[k];
    for (auto& c : a) c = c * lead;
    for (std::size_t i = 0; i <= m; ++i) a[k - m + i] -= top * b[i];
    trim(a);
  }
  return a;
}

void divide_all(Coefficients& c, const Poly& divisor) {
  for (auto& x : c) x = divide_exact(x, divisor);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    return Poly::term(Monomial::gcd(a.monomial_content(), b.monomial_content()), 1);
  }
  if (a == b) return a.primitive();

  std::vector<std::string> names = a.variables();
  const auto more = b.variables();
  names.insert(names.end(), more.begin(), more.end());
  const std::string x = *std::min_element(names.begin(), names.end());

  Coefficients ca = a.coefficients_in(x);
  Coefficients cb = b.coefficients_in(x);
  if (ca.size() == 1) {
    cb.push_back(a);
    return gcd_of(cb);
  }
  if (cb.size() == 1) {
    ca.push_back(b);
    return gcd_of(ca);
  }

  const Poly content_a = gcd_of(ca);
  const Poly content_b = gcd_of(cb);
  const Poly content = gcd(content_a, content_b);
  divide_all(ca, content_a);
  divide_all(cb, content_b);
  if (ca.size() < cb.size()) std::swap(ca, cb);

  while (true) {
    Coefficients r = pseudo_remainder(ca, cb);
    if (r.empty()) break;
    if (r.size() == 1) {
      cb = {Poly(1)};
      break;
    }
    divide_all(r, gcd_of(r));
    // gcd_of treats rational constants as units, so strip the numeric
    // content separately; without this the coefficients grow exponentially.
    const Rational numeric = Poly::from_coefficients(x, r).content();
    for (auto& c : r) c = c.scaled(1 / numeric);
    ca = std::move(cb);
    cb = std::move(r);
  }
  return (Poly::from_coefficients(x, cb) * content).primitive();
}

}  // namespace sforge
