#include "soliton_forge/verify/record.hpp"

#include <algorithm>

namespace sforge {

const char* to_string(Status status) {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Conditional: return "conditional";
    case Status::Unchecked: return "unchecked";
    case Status::Info: return "info";
  }
  return "?";
}

const char* to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::Check: return "check";
    case RecordKind::Identity: return "identity";
    case RecordKind::CrossCheck: return "cross-check";
    case RecordKind::Relation: return "relation";
    case RecordKind::Info: return "info";
  }
  return "?";
}

std::string Condition::to_string() const { return polynomial.to_string() + " = 0"; }

namespace {

// Root search is skipped for coefficients beyond this size.
const Integer kDivisorSearchLimit("1000000000000");

std::vector<Integer> positive_divisors(Integer value) {
  if (value < 0) value = -value;
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      small.push_back(d);
      if (d * d != value) large.push_back(value / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// Divide by (x - root); the root must be exact.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  std::vector<Rational> out(coeffs.size() - 1);
  Rational carry = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    carry = carry * root + coeffs[k];
    out[k - 1] = carry;
  }
  return out;
}

void factor_univariate(Condition& cond, const std::string& x) {
  cond.variable = x;
  const auto poly_coeffs = cond.polynomial.coefficients_in(x);
  std::vector<Rational> coeffs;
  coeffs.reserve(poly_coeffs.size());
  for (const auto& c : poly_coeffs) coeffs.push_back(c.constant_term());

  std::vector<Rational> roots;
  auto linear = [&x](const Rational& root) {
    // q x - p for root p/q
    return (Poly::variable(x).scaled(Rational(root.get_den())) - Poly(Rational(root.get_num()))).primitive();
  };

  if (coeffs.front() == 0) {
    roots.emplace_back(0);
    while (!coeffs.empty() && coeffs.front() == 0) coeffs.erase(coeffs.begin());
  }
  const Integer c0 = coeffs.front().get_num();
  const Integer cn = coeffs.back().get_num();
  const bool searchable = abs(c0) <= kDivisorSearchLimit && abs(cn) <= kDivisorSearchLimit;
  if (coeffs.size() > 1 && searchable) {
    std::vector<Rational> candidates;
    for (const auto& p : positive_divisors(c0)) {
      for (const auto& q : positive_divisors(cn)) {
        Rational r(p, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      bool found = false;
      while (coeffs.size() > 1 && evaluate(coeffs, r) == 0) {
        coeffs = deflate(coeffs, r);
        found = true;
      }
      if (found) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  cond.roots = roots;
  for (const auto& r : roots) cond.factors.push_back(linear(r));
  if (coeffs.size() > 1) {
    std::vector<Poly> rest;
    for (const auto& c : coeffs) rest.emplace_back(c);
    cond.factors.push_back(Poly::from_coefficients(x, rest).primitive());
  }
}

}  // namespace

std::optional<Condition> common_condition(const std::vector<ScalarExpr>& residuals,
                                          const std::set<Sym>& assume_nonzero) {
  Poly g;
  for (const auto& r : residuals) {
    if (r.is_zero()) continue;
    g = gcd(g, r.num());
    if (g.is_constant()) return std::nullopt;
  }
  if (g.is_zero()) return std::nullopt;
  const Monomial shared = g.monomial_content();
  for (const auto& [name, exp] : shared.factors()) {
    if (assume_nonzero.count(Sym(name)) != 0) {
      g = divide_exact(g, Poly::term(Monomial::variable(name, exp), 1));
    }
  }
  g = g.primitive();
  if (g.is_constant()) return std::nullopt;

  Condition cond;
  cond.polynomial = g;
  const auto vars = g.variables();
  if (vars.size() == 1) {
    factor_univariate(cond, vars.front());
  } else {
    cond.factors.push_back(g);
  }
  return cond;
}

bool Record::is_hard_failure() const {
  return (kind == RecordKind::Check || kind == RecordKind::Identity) && status == Status::Fails;
}

void classify(Record& record) {
  record.condition.reset();
  if (record.kind == RecordKind::Info) {
    record.status = Status::Info;
    return;
  }
  if (record.rank_subject) {
    const auto rank = numeric_rank(*record.rank_subject);
    record.residuals.clear();
    if (!rank) {
      record.status = Status::Unchecked;
      return;
    }
    if (*rank != record.expected_rank) {
      record.residuals.push_back({"rank - expected", ScalarExpr(static_cast<long>(*rank)) -
                                                         ScalarExpr(static_cast<long>(record.expected_rank))});
    }
    record.status = record.residuals.empty() ? Status::Holds : Status::Fails;
    return;
  }
  std::erase_if(record.residuals, [](const Residual& r) { return r.value.is_zero(); });
  if (record.residuals.empty()) {
    record.status = Status::Holds;
    return;
  }
  std::vector<ScalarExpr> values;
  values.reserve(record.residuals.size());
  for (const auto& r : record.residuals) values.push_back(r.value);
  record.condition = common_condition(values, record.assume_nonzero);
  record.status = record.condition ? Status::Conditional : Status::Fails;
}

Record make_record(std::string id, std::string title, RecordKind kind, std::vector<Residual> residuals,
                   const std::set<Sym>& assume_nonzero) {
  Record record;
  record.id = std::move(id);
  record.title = std::move(title);
  record.kind = kind;
  record.residuals = std::move(residuals);
  record.assume_nonzero = assume_nonzero;
  classify(record);
  return record;
}

Record substitute(const Record& record, const Bindings& bindings) {
  Record out = record;
  for (auto& r : out.residuals) r.value = r.value.substitute(bindings);
  for (auto& v : out.values) v.value = v.value.substitute(bindings);
  if (out.rank_subject) out.rank_subject = out.rank_subject->substitute(bindings);
  classify(out);
  return out;
}

std::optional<ScalarExpr> solve_linear(const std::vector<ScalarExpr>& equations, const Sym& x) {
  const auto at = [&x](const ScalarExpr& e, long v) { return e.substitute({{x, ScalarExpr(v)}}); };
  std::optional<ScalarExpr> solution;
  for (const auto& e : equations) {
    if (e.symbols().count(x.name()) == 0) continue;
    if (e.den().degree_in(x.name()) != 0) return std::nullopt;
    const ScalarExpr b = at(e, 0);
    const ScalarExpr a = at(e, 1) - b;
    if (a.is_zero() || e != a * ScalarExpr(x) + b) return std::nullopt;
    solution = -b / a;
    break;
  }
  if (!solution) return std::nullopt;
  try {
    for (const auto& e : equations) {
      if (!e.substitute({{x, *solution}}).is_zero()) return std::nullopt;
    }
  } catch (const DivisionByZero&) {
    return std::nullopt;
  }
  return solution;
}

std::string index_label(std::initializer_list<std::size_t> zero_based) {
  std::string out = "(";
  bool first = true;
  for (const auto i : zero_based) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + ")";
}

std::vector<Residual> matrix_residuals(const Matrix& m) {
  std::vector<Residual> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out.push_back({index_label({i, j}), m(i, j)});
  }
  return out;
}

}  // namespace sforge
