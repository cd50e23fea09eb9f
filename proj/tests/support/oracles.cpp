#include "support/oracles.hpp"

#include "soliton_forge/algebra/parse.hpp"

#include <stdexcept>

#ifndef SFORGE_FIXTURE_DIR
#error "SFORGE_FIXTURE_DIR must point at the fixture directory"
#endif

namespace sforge::testing {

namespace {

Rational constant(const ScalarExpr& x) {
  const auto v = x.constant_value();
  if (!v) throw std::invalid_argument("oracle needs numeric entries, got " + x.to_string());
  return *v;
}

// Row-reduces the augmented system in place; returns the unique solution.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Rational lead = rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    pivot_col.push_back(col);
    ++pivot_row;
  }
  if (pivot_col.size() != unknowns) return std::nullopt;
  for (std::size_t r = pivot_row; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = rows[r][unknowns];
  return x;
}

FrameSpec base_spec(std::size_t n) {
  FrameSpec s;
  s.dimension = n;
  s.metric = identity_matrix(n);
  s.structure = Rank3(n);
  s.phi = Matrix(n);
  s.xi = VectorField::basis(n, n - 1);
  return s;
}

void bracket(FrameSpec& s, std::size_t i, std::size_t j, std::size_t k, const ScalarExpr& c) {
  s.structure(i, j, k) = s.structure(i, j, k) + c;
  s.structure(j, i, k) = s.structure(j, i, k) - c;
}

FrameSpec lorentz_frame() {
  FrameSpec s = base_spec(4);
  s.metric(3, 3) = -1;
  for (std::size_t i = 0; i < 3; ++i) s.phi(i, i) = 1;
  s.assume_nonzero = {Sym("alpha"), Sym("beta"), Sym("tau")};
  return s;
}

Rational pick(std::mt19937_64& rng, const std::vector<Rational>& choices) {
  std::uniform_int_distribution<std::size_t> d(0, choices.size() - 1);
  return choices[d(rng)];
}

}  // namespace

std::optional<Rank3> brute_force_connection(const FrameSpec& spec) {
  const std::size_t n = spec.dimension;
  const std::size_t unknowns = n * n * n;
  auto u = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };

  std::vector<std::vector<Rational>> rows;
  // Gamma^k_ij - Gamma^k_ji = C^k_ij
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(unknowns + 1);
        row[u(i, j, k)] += 1;
        row[u(j, i, k)] -= 1;
        row[unknowns] = constant(spec.structure(i, j, k));
        rows.push_back(std::move(row));
      }
    }
  }
  // g(nabla_i f_j, f_k) + g(f_j, nabla_i f_k) = 0 since g_jk is constant
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        std::vector<Rational> row(unknowns + 1);
        for (std::size_t m = 0; m < n; ++m) {
          row[u(i, j, m)] += constant(spec.metric(m, k));
          row[u(i, k, m)] += constant(spec.metric(j, m));
        }
        rows.push_back(std::move(row));
      }
    }
  }

  const auto x = solve(std::move(rows), unknowns);
  if (!x) return std::nullopt;
  Rank3 gamma(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) gamma(i, j, k) = ScalarExpr((*x)[u(i, j, k)]);
    }
  }
  return gamma;
}

Rank4 riemann_by_definition(const FrameSpec& spec, const Rank3& gamma) {
  const std::size_t n = spec.dimension;
  Rank4 r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // nabla_j f_k = sum_m gamma(j,k,m) f_m, then differentiate along f_i.
        for (std::size_t l = 0; l < n; ++l) {
          ScalarExpr sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += gamma(j, k, m) * gamma(i, m, l);
            sum -= gamma(i, k, m) * gamma(j, m, l);
            sum -= spec.structure(i, j, m) * gamma(m, k, l);
          }
          r(i, j, k, l) = sum;
        }
      }
    }
  }
  return r;
}

ScalarExpr signed_trace_diagonal(const FrameSpec& spec, const Matrix& ricci) {
  ScalarExpr sum;
  for (std::size_t j = 0; j < spec.dimension; ++j) {
    const ScalarExpr& e = spec.metric(j, j);
    if (!(e == ScalarExpr(1) || e == ScalarExpr(-1))) throw std::invalid_argument("metric is not pseudo-orthonormal");
    sum += e * ricci(j, j);
  }
  return sum;
}

Matrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_expr(rows[i][j]);
  }
  return m;
}

FrameSpec lps_example() {
  FrameSpec s = lorentz_frame();
  const ScalarExpr a = ScalarExpr::symbol("a");
  for (std::size_t i = 0; i < 3; ++i) bracket(s, i, 3, i, a);
  return s;
}

FrameSpec minkowski4() { return lorentz_frame(); }

FrameSpec heisenberg3() {
  FrameSpec s = base_spec(3);
  bracket(s, 0, 1, 2, 1);
  s.phi(0, 0) = 1;
  s.phi(1, 1) = 1;
  s.assume_nonzero = {Sym("alpha"), Sym("beta"), Sym("tau")};
  return s;
}

FrameSpec so3_frame() {
  FrameSpec s = base_spec(3);
  bracket(s, 1, 2, 0, 1);
  bracket(s, 2, 0, 1, 1);
  bracket(s, 0, 1, 2, 2);
  s.phi(0, 0) = 1;
  s.phi(1, 1) = 1;
  s.assume_nonzero = {Sym("alpha"), Sym("beta"), Sym("tau")};
  return s;
}

RandomSpec random_lie_spec(std::mt19937_64& rng) {
  const std::vector<Rational> params{1, -1, 2, -2, 3, Rational(1, 2), Rational(-1, 3)};
  std::uniform_int_distribution<std::size_t> dim_dist(2, 4);
  const std::size_t n = dim_dist(rng);
  FrameSpec base = base_spec(n);
  std::string description;

  std::uniform_int_distribution<int> family_dist(0, n >= 3 ? 3 : 1);
  switch (family_dist(rng)) {
    case 0: {  // [f_i, f_n] = d_i f_i
      description = "diagonal derivation";
      for (std::size_t i = 0; i + 1 < n; ++i) bracket(base, i, n - 1, i, ScalarExpr(pick(rng, params)));
      break;
    }
    case 1: {  // [f_1, f_2] = c f_2, rest abelian
      description = "affine line plus abelian";
      bracket(base, 0, 1, 1, ScalarExpr(pick(rng, params)));
      break;
    }
    case 2: {  // Milnor frame (l1, l2, l3), unimodular
      description = "Milnor frame plus abelian";
      bracket(base, 1, 2, 0, ScalarExpr(pick(rng, params)));
      bracket(base, 2, 0, 1, ScalarExpr(pick(rng, params)));
      bracket(base, 0, 1, 2, ScalarExpr(pick(rng, params)));
      break;
    }
    default: {  // Heisenberg plus abelian
      description = "Heisenberg plus abelian";
      bracket(base, 0, 1, 2, ScalarExpr(pick(rng, params)));
      break;
    }
  }

  // Random invertible integer basis change P; new frame f'_a = sum_b P(b,a) f_b.
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix p(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = static_cast<long>(entry(rng));
    }
  } while (determinant(p).is_zero());
  const Matrix p_inv = inverse(p);

  std::uniform_int_distribution<int> sign(0, 3);
  Matrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = sign(rng) == 0 ? ScalarExpr(-1) : ScalarExpr(pick(rng, {1, 2, Rational(1, 2)}));

  FrameSpec s = base_spec(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ScalarExpr g;
      for (std::size_t c = 0; c < n; ++c) g += p(c, a) * d(c, c) * p(c, b);
      s.metric(a, b) = g;
      for (std::size_t k = 0; k < n; ++k) {
        ScalarExpr sum;
        for (std::size_t c = 0; c < n; ++c) {
          if (p(c, a).is_zero()) continue;
          for (std::size_t e = 0; e < n; ++e) {
            if (p(e, b).is_zero()) continue;
            for (std::size_t f = 0; f < n; ++f) sum += p(c, a) * p(e, b) * base.structure(c, e, f) * p_inv(k, f);
          }
        }
        s.structure(a, b, k) = sum;
      }
    }
  }
  return {s, description + ", n = " + std::to_string(n)};
}

std::string fixture_path(const std::string& name) { return std::string(SFORGE_FIXTURE_DIR) + "/" + name; }

}  // namespace sforge::testing
