#pragma once

// Curvature of a frame-constant metric.
//
// Conventions:
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   riemann(i, j, k, l) = R^l_kij, i.e. R(f_i, f_j) f_k = sum_l R^l_kij f_l
//   S(Y, Z) = trace(X -> R(X,Y)Z)
// With these, the four-dimensional LP-Sasakian example frame has
// S = diag(3a^2, 3a^2, 3a^2, -3a^2).

#include "soliton_forge/geometry/connection.hpp"

#include <vector>

namespace sforge {

enum class RConvention {
  Signed,    ///< r = g^{jk} S_jk
  Unsigned,  ///< r = sum_j S_jj
};

const char* to_string(RConvention convention);

struct CurvatureBundle {
  Rank4 riemann;
  Matrix ricci;
  ScalarExpr r_signed;
  ScalarExpr r_unsigned;
  /// ricci_operator(i, j) = Q^i_j = g^{ik} S_kj
  Matrix ricci_operator;
  ScalarExpr ricci_operator_norm_sq;
  /// nabla_ricci(k, i, j) = (nabla_k S)_ij
  Rank3 nabla_ricci;

  const ScalarExpr& scalar(RConvention convention) const {
    return convention == RConvention::Signed ? r_signed : r_unsigned;
  }
};

Rank4 riemann(const FrameSpec& spec, const Connection& conn);

/// g^{il} g(R(f_i, f_j) f_k, f_l): contraction of the lowered tensor.
Matrix ricci(const FrameSpec& spec, const Connection& conn, const Rank4& riem);
/// sum_i R^i_kij, the plain trace.
Matrix ricci_by_trace(const Rank4& riem);
/// sum_i eps_i g(R(f_i, f_j) f_k, f_i); only for diagonal metrics with
/// entries +1 or -1, nullopt otherwise.
std::optional<Matrix> ricci_pseudo_orthonormal(const FrameSpec& spec, const Rank4& riem);

struct ScalarCurvatures {
  ScalarExpr r_signed;
  ScalarExpr r_unsigned;
};
ScalarCurvatures scalar_curvatures(const Connection& conn, const Matrix& ricci);

struct RicciOperator {
  Matrix q;
  ScalarExpr norm_sq;
};
RicciOperator ricci_operator(const Connection& conn, const Matrix& ricci);

/// (nabla_k S)_ij = -sum_m (Gamma^m_ki S_mj + Gamma^m_kj S_im).
Rank3 covariant_derivative_ricci(const Connection& conn, const Matrix& ricci);

CurvatureBundle compute_curvature(const FrameSpec& spec, const Connection& conn);

/// One non-zero component of an indexed quantity, with one-based indices.
struct IndexedValue {
  std::vector<std::size_t> index;
  ScalarExpr value;
};

struct DefectList {
  std::vector<IndexedValue> defects;
  bool holds() const { return defects.empty(); }
};

/// D_kij = (nabla_k S)_ij - (nabla_j S)_ki.
DefectList codazzi_defect(const Rank3& nabla_ricci);

/// Every non-zero (nabla_k S)_ij. This is the unrestricted condition
/// g((nabla_K Q) X, Y) = 0 for all K, X, Y, with no restriction of X, Y to
/// the horizontal distribution.
DefectList eta_parallel_defect(const Rank3& nabla_ricci);

inline constexpr const char* kEtaParallelNote =
    "X, Y range over every frame vector; the usual definition restricts them to ker eta, so this is stronger";

/// g(R(f_i, f_j) f_k, f_l), indexed (i, j, k, l).
Rank4 lowered_riemann(const FrameSpec& spec, const Rank4& riem);

/// Non-zero residuals of the algebraic curvature identities.
struct CurvatureIdentityResiduals {
  std::vector<IndexedValue> antisymmetry;     // R^l_kij + R^l_kji
  std::vector<IndexedValue> first_bianchi;    // cyclic sum over (i, j, k)
  std::vector<IndexedValue> lowered_skew;     // R_ijkl + R_ijlk
  std::vector<IndexedValue> pair_symmetry;    // R_ijkl - R_klij
  std::vector<IndexedValue> ricci_symmetry;   // S_ij - S_ji

  bool all_hold() const;
};
CurvatureIdentityResiduals curvature_identity_residuals(const FrameSpec& spec, const CurvatureBundle& curv);

}  // namespace sforge
