#pragma once

#include "soliton_forge/frame/frame_spec.hpp"

namespace sforge {

/// Levi-Civita connection in the frame: gamma(i, j, k) = Gamma^k_ij with
/// nabla_{f_i} f_j = sum_k Gamma^k_ij f_k.
struct Connection {
  Rank3 gamma;
  /// g^{ij}, computed once alongside gamma and reused downstream.
  Matrix inverse_metric;
};

/// Koszul formula for a frame-constant metric:
///
///   2 g(nabla_{f_i} f_j, f_k) = g([f_i,f_j],f_k) - g([f_j,f_k],f_i) + g([f_k,f_i],f_j)
///
/// The directional-derivative terms X g(Y,Z) of the general formula vanish
/// because every g_ij is constant; this is only the Levi-Civita connection
/// under that assumption. Throws SpecError("nondegeneracy") for singular g.
Connection koszul_connection(const FrameSpec& spec);

/// (nabla_X Y)^k = sum_ij X^i Y^j Gamma^k_ij for frame-constant X, Y.
VectorField covariant_derivative(const Connection& conn, const VectorField& x, const VectorField& y);

/// (nabla_i eta)_j = -sum_k Gamma^k_ij eta_k for the frame-constant eta of xi.
Matrix covariant_derivative_eta(const FrameSpec& spec, const Connection& conn);

/// Gamma^k_ij - Gamma^k_ji - C^k_ij, indexed (i, j, k).
Rank3 torsion_residual(const FrameSpec& spec, const Connection& conn);

/// sum_m (Gamma^m_ik g_mj + Gamma^m_ij g_mk), indexed (i, j, k).
Rank3 metric_compatibility_residual(const FrameSpec& spec, const Connection& conn);

}  // namespace sforge
