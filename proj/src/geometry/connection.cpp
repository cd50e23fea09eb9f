#include "soliton_forge/geometry/connection.hpp"

namespace sforge {

Connection koszul_connection(const FrameSpec& spec) {
  const std::size_t n = spec.dimension;
  const Matrix& g = spec.metric;
  Connection conn;
  try {
    conn.inverse_metric = inverse(g);
  } catch (const DivisionByZero&) {
    throw SpecError("nondegeneracy", "metric is singular");
  }

  // lowered(i, j, k) = g([f_i, f_j], f_k)
  Rank3 lowered(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ScalarExpr sum;
        for (std::size_t l = 0; l < n; ++l) sum += spec.structure(i, j, l) * g(l, k);
        lowered(i, j, k) = sum;
      }
    }
  }

  const ScalarExpr half = Rational(1, 2);
  conn.gamma = Rank3(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // koszul[k] = g(nabla_{f_i} f_j, f_k)
      std::vector<ScalarExpr> koszul(n);
      for (std::size_t k = 0; k < n; ++k) {
        koszul[k] = half * (lowered(i, j, k) - lowered(j, k, i) + lowered(k, i, j));
      }
      for (std::size_t m = 0; m < n; ++m) {
        ScalarExpr sum;
        for (std::size_t k = 0; k < n; ++k) sum += conn.inverse_metric(m, k) * koszul[k];
        conn.gamma(i, j, m) = sum;
      }
    }
  }
  return conn;
}

VectorField covariant_derivative(const Connection& conn, const VectorField& x, const VectorField& y) {
  const std::size_t n = conn.gamma.dim();
  VectorField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ScalarExpr w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * conn.gamma(i, j, k);
    }
  }
  return out;
}

Matrix covariant_derivative_eta(const FrameSpec& spec, const Connection& conn) {
  const std::size_t n = spec.dimension;
  const CoVector eta = eta_from_xi(spec);
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ScalarExpr sum;
      for (std::size_t k = 0; k < n; ++k) sum -= conn.gamma(i, j, k) * eta[k];
      out(i, j) = sum;
    }
  }
  return out;
}

Rank3 torsion_residual(const FrameSpec& spec, const Connection& conn) {
  const std::size_t n = spec.dimension;
  Rank3 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out(i, j, k) = conn.gamma(i, j, k) - conn.gamma(j, i, k) - spec.structure(i, j, k);
      }
    }
  }
  return out;
}

Rank3 metric_compatibility_residual(const FrameSpec& spec, const Connection& conn) {
  const std::size_t n = spec.dimension;
  Rank3 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ScalarExpr sum;
        for (std::size_t m = 0; m < n; ++m) {
          sum += conn.gamma(i, k, m) * spec.metric(m, j) + conn.gamma(i, j, m) * spec.metric(m, k);
        }
        out(i, j, k) = sum;
      }
    }
  }
  return out;
}

}  // namespace sforge
