#pragma once

// Ricci-Yamabe soliton residuals on a frame-constant spec.

#include "soliton_forge/verify/params.hpp"
#include "soliton_forge/verify/record.hpp"

#include <variant>
#include <vector>

namespace sforge {

/// (L_V g)_ij + 2 alpha S_ij + (2 lambda - beta r) g_ij, with r taken in the
/// convention of `params`. Zero exactly when (g, V, lambda, alpha, beta) is a
/// soliton.
Matrix rys_residual(const FrameSpec& spec, const CurvatureBundle& curv, const VectorField& v,
                    const SolitonParams& params);

struct EinsteinLambda {
  /// S = c g
  ScalarExpr c;
  /// (beta r - 2 alpha c) / 2
  ScalarExpr lambda;
};

struct NotEinstein {
  /// Non-zero components of S - (r_signed / n) g.
  std::vector<IndexedValue> offending;
};

/// Einstein constant c = r_signed / n, then lambda from the V = 0 soliton
/// equation. NotEinstein when S is not a multiple of g.
std::variant<EinsteinLambda, NotEinstein> solve_lambda_einstein(const FrameSpec& spec, const CurvatureBundle& curv,
                                                                  const SolitonParams& params);

/// Einstein-case quantities for the given lambda: S(X, xi) coefficient,
/// S(xi, xi), the eigenvalue of Q and the soliton scalar curvature
/// n (beta r - 2 lambda) / (2 alpha). The residuals compare S(xi, xi), computed
/// once through eta(xi) and once through g(xi, xi), with (2 lambda - beta r) / (2 alpha);
/// both vanish when eta(xi) = -1.
Record lemma_quantities(const FrameSpec& spec, const CurvatureBundle& curv, const SolitonParams& params);

/// Substitutes alpha = n beta / 2 into the Einstein lambda and compares with
/// beta (r - n(n-1)) / 2. Unchecked when the spec is not Einstein.
Record lambda_consistency(const FrameSpec& spec, const CurvatureBundle& curv, RConvention convention);

/// Hess(f)_ij = -sum_k Gamma^k_ij df_k for a frame-constant differential df.
Matrix hessian(const FrameSpec& spec, const Connection& conn, const CoVector& df);

/// df([f_i, f_j]) for i < j: zero iff the frame-constant one-form is closed,
/// which is what makes the Hessian symmetric.
std::vector<IndexedValue> exactness_defect(const FrameSpec& spec, const CoVector& df);

/// Hess(f) + alpha S + (lambda - beta r / 2) g: the soliton equation with
/// V = Df, using L_Df g = 2 Hess(f).
Matrix grys_residual(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv, const CoVector& df,
                     const SolitonParams& params);

/// Every record of the soliton analysis for one spec, in report order.
/// Uses the Einstein lambda where it exists, the free symbol otherwise.
std::vector<Record> soliton_records(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                                    RConvention convention);

}  // namespace sforge
