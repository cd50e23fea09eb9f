#include "soliton_forge/frame/tensor.hpp"

#include <numeric>

namespace sforge {
namespace {

// Laplace expansion along the first listed row.
ScalarExpr minor_determinant(const Matrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  ScalarExpr total;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const ScalarExpr& entry = m(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != c) sub_cols.push_back(cols[k]);
    }
    ScalarExpr term = entry * minor_determinant(m, sub_rows, sub_cols);
    if (c % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != skip) out.push_back(k);
  }
  return out;
}

}  // namespace

Matrix identity_matrix(std::size_t n) {
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

ScalarExpr determinant(const Matrix& m) {
  if (m.dim() == 0) return 1;
  std::vector<std::size_t> idx(m.dim());
  std::iota(idx.begin(), idx.end(), 0);
  return minor_determinant(m, idx, idx);
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.dim();
  const ScalarExpr det = determinant(m);
  if (det.is_zero()) throw DivisionByZero("singular matrix");
  Matrix out(n);
  if (n == 1) {
    out(0, 0) = ScalarExpr(1) / det;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(m)(i, j) is the (j, i) cofactor.
      ScalarExpr cofactor = minor_determinant(m, all_but(n, j), all_but(n, i));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      out(i, j) = cofactor / det;
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ScalarExpr sum;
      for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

Matrix scaled(const Matrix& m, const ScalarExpr& factor) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j) * factor;
  }
  return out;
}

std::optional<std::size_t> numeric_rank(const Matrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = m(i, j).constant_value();
      if (!v) return std::nullopt;
      rows[i][j] = *v;
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace sforge
