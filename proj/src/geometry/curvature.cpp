#include "soliton_forge/geometry/curvature.hpp"

namespace sforge {

const char* to_string(RConvention convention) {
  return convention == RConvention::Signed ? "signed" : "unsigned";
}

Rank4 riemann(const FrameSpec& spec, const Connection& conn) {
  const std::size_t n = spec.dimension;
  const Rank3& gam = conn.gamma;
  const Rank3& c = spec.structure;
  Rank4 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ScalarExpr sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += gam(j, k, m) * gam(i, m, l) - gam(i, k, m) * gam(j, m, l) - c(i, j, m) * gam(m, k, l);
          }
          out(i, j, k, l) = sum;
        }
      }
    }
  }
  return out;
}

Rank4 lowered_riemann(const FrameSpec& spec, const Rank4& riem) {
  const std::size_t n = spec.dimension;
  Rank4 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ScalarExpr sum;
          for (std::size_t m = 0; m < n; ++m) sum += riem(i, j, k, m) * spec.metric(m, l);
          out(i, j, k, l) = sum;
        }
      }
    }
  }
  return out;
}

Matrix ricci(const FrameSpec& spec, const Connection& conn, const Rank4& riem) {
  const std::size_t n = spec.dimension;
  const Rank4 low = lowered_riemann(spec, riem);
  Matrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      ScalarExpr sum;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) sum += conn.inverse_metric(i, l) * low(i, j, k, l);
      }
      out(j, k) = sum;
    }
  }
  return out;
}

Matrix ricci_by_trace(const Rank4& riem) {
  const std::size_t n = riem.dim();
  Matrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      ScalarExpr sum;
      for (std::size_t i = 0; i < n; ++i) sum += riem(i, j, k, i);
      out(j, k) = sum;
    }
  }
  return out;
}

std::optional<Matrix> ricci_pseudo_orthonormal(const FrameSpec& spec, const Rank4& riem) {
  const std::size_t n = spec.dimension;
  std::vector<ScalarExpr> eps(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !spec.metric(i, j).is_zero()) return std::nullopt;
    }
    const ScalarExpr& d = spec.metric(i, i);
    if (d != ScalarExpr(1) && d != ScalarExpr(-1)) return std::nullopt;
    eps[i] = d;
  }
  const Rank4 low = lowered_riemann(spec, riem);
  Matrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      ScalarExpr sum;
      for (std::size_t i = 0; i < n; ++i) sum += eps[i] * low(i, j, k, i);
      out(j, k) = sum;
    }
  }
  return out;
}

ScalarCurvatures scalar_curvatures(const Connection& conn, const Matrix& ricci) {
  const std::size_t n = ricci.dim();
  ScalarCurvatures out;
  for (std::size_t j = 0; j < n; ++j) {
    out.r_unsigned += ricci(j, j);
    for (std::size_t k = 0; k < n; ++k) out.r_signed += conn.inverse_metric(j, k) * ricci(j, k);
  }
  return out;
}

RicciOperator ricci_operator(const Connection& conn, const Matrix& ricci) {
  const std::size_t n = ricci.dim();
  RicciOperator out{conn.inverse_metric * ricci, ScalarExpr()};
  // |Q|^2 = g^{ik} g^{jl} S_ij S_kl = trace(Q Q)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.norm_sq += out.q(i, j) * out.q(j, i);
  }
  return out;
}

Rank3 covariant_derivative_ricci(const Connection& conn, const Matrix& ricci) {
  const std::size_t n = ricci.dim();
  const Rank3& gam = conn.gamma;
  Rank3 out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ScalarExpr sum;
        for (std::size_t m = 0; m < n; ++m) sum -= gam(k, i, m) * ricci(m, j) + gam(k, j, m) * ricci(i, m);
        out(k, i, j) = sum;
      }
    }
  }
  return out;
}

CurvatureBundle compute_curvature(const FrameSpec& spec, const Connection& conn) {
  CurvatureBundle out;
  out.riemann = riemann(spec, conn);
  out.ricci = ricci(spec, conn, out.riemann);
  const ScalarCurvatures r = scalar_curvatures(conn, out.ricci);
  out.r_signed = r.r_signed;
  out.r_unsigned = r.r_unsigned;
  RicciOperator q = ricci_operator(conn, out.ricci);
  out.ricci_operator = std::move(q.q);
  out.ricci_operator_norm_sq = q.norm_sq;
  out.nabla_ricci = covariant_derivative_ricci(conn, out.ricci);
  return out;
}

namespace {

std::vector<std::size_t> one_based(std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> out;
  for (const auto i : idx) out.push_back(i + 1);
  return out;
}

void keep_nonzero(std::vector<IndexedValue>& out, std::initializer_list<std::size_t> idx, ScalarExpr value) {
  if (!value.is_zero()) out.push_back({one_based(idx), std::move(value)});
}

}  // namespace

DefectList codazzi_defect(const Rank3& nabla_ricci) {
  const std::size_t n = nabla_ricci.dim();
  DefectList out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        keep_nonzero(out.defects, {k, i, j}, nabla_ricci(k, i, j) - nabla_ricci(j, k, i));
      }
    }
  }
  return out;
}

DefectList eta_parallel_defect(const Rank3& nabla_ricci) {
  const std::size_t n = nabla_ricci.dim();
  DefectList out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) keep_nonzero(out.defects, {k, i, j}, nabla_ricci(k, i, j));
    }
  }
  return out;
}

bool CurvatureIdentityResiduals::all_hold() const {
  return antisymmetry.empty() && first_bianchi.empty() && lowered_skew.empty() && pair_symmetry.empty() &&
         ricci_symmetry.empty();
}

CurvatureIdentityResiduals curvature_identity_residuals(const FrameSpec& spec, const CurvatureBundle& curv) {
  const std::size_t n = spec.dimension;
  const Rank4& r = curv.riemann;
  const Rank4 low = lowered_riemann(spec, r);
  CurvatureIdentityResiduals out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      keep_nonzero(out.ricci_symmetry, {i, j}, curv.ricci(i, j) - curv.ricci(j, i));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          keep_nonzero(out.antisymmetry, {i, j, k, l}, r(i, j, k, l) + r(j, i, k, l));
          keep_nonzero(out.first_bianchi, {i, j, k, l}, r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l));
          keep_nonzero(out.lowered_skew, {i, j, k, l}, low(i, j, k, l) + low(i, j, l, k));
          keep_nonzero(out.pair_symmetry, {i, j, k, l}, low(i, j, k, l) - low(k, l, i, j));
        }
      }
    }
  }
  return out;
}

}  // namespace sforge
