#pragma once

// Perfect-fluid and dust spacetimes: energy tensors, field-equation
// residuals and the closed forms for |Q|^2.

#include "soliton_forge/verify/params.hpp"
#include "soliton_forge/verify/record.hpp"

#include <vector>

namespace sforge {

/// T_ij = (rho - p) eta_i eta_j + p g_ij, with xi as the flow vector field.
Matrix perfect_fluid_energy_tensor(const FrameSpec& spec, const FluidParams& fluid);

/// T_ij = rho eta_i eta_j.
Matrix dust_energy_tensor(const FrameSpec& spec, const FluidParams& fluid);

/// S_ij - (r/2) g_ij [+ mu g_ij] - tau T_ij, r in the given convention.
Matrix efe_residual(const FrameSpec& spec, const CurvatureBundle& curv, const FluidParams& fluid, const Matrix& t,
                    bool with_cosmological, RConvention convention);

/// (4 mu - r + 2 lambda / beta) / (4 tau): the Einstein-like energy tensor of
/// a four-dimensional soliton spacetime with alpha = 2 beta, divided by g.
ScalarExpr soliton_energy_coefficient(const SolitonParams& params, const FluidParams& fluid, const ScalarExpr& r);

/// soliton_energy_coefficient(r) g with r from `curv` in the params' convention.
Matrix soliton_energy_tensor(const FrameSpec& spec, const CurvatureBundle& curv, const SolitonParams& params,
                             const FluidParams& fluid);

/// Closed forms for |Q|^2 as stated for the four-dimensional spacetime.
struct QNormFormulas {
  /// (1/16) [tau (rho - 3p) - 3 lambda / beta]^2
  ScalarExpr perfect_fluid;
  /// (3 lambda / (4 beta))^2
  ScalarExpr radiation;
  /// (1/16) [tau rho - 2 lambda / beta]^2
  ScalarExpr dust;
};
QNormFormulas q_norm_formulas(const SolitonParams& params, const FluidParams& fluid);

/// Identity records: rho = 3p turns the perfect-fluid form into the radiation
/// form, and lambda = beta tau rho / 2 makes the dust form vanish.
std::vector<Record> q_norm_records(const SolitonParams& params, const FluidParams& fluid);

/// Dust without cosmological term on an Einstein soliton, S = c g with
/// c = (beta r - 2 lambda)/(2 alpha): solves
///   (c - r/2) g_ij = tau rho eta_i eta_j
/// for r once by the full trace and once by contracting with eta, and reports
/// their difference. Its numerator is a multiple of alpha tau rho g(xi,xi);
/// under alpha, tau != 0 the record is conditional on rho = 0, the vacuum.
Record dust_vacuum_check(const FrameSpec& spec, const FluidParams& fluid, const SolitonParams& params);

/// Every record of the fluid analysis for one spec, in report order.
std::vector<Record> fluid_records(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                                  RConvention convention);

}  // namespace sforge
