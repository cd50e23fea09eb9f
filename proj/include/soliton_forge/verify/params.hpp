#pragma once

#include "soliton_forge/geometry/curvature.hpp"

#include <string>
#include <vector>

namespace sforge {

/// Names of the free parameters the verification layer introduces.
namespace param {
inline constexpr const char* alpha = "alpha";
inline constexpr const char* beta = "beta";
inline constexpr const char* lambda = "lambda";
inline constexpr const char* mu = "mu";
inline constexpr const char* tau = "tau";
inline constexpr const char* rho = "rho";
inline constexpr const char* p = "p";
/// Scalar curvature as an abstract symbol, for the pure-algebra checks.
inline constexpr const char* r = "r";

/// Every name above; these are accepted in substitutions in addition to the
/// symbols of the loaded spec.
std::vector<std::string> all();
}  // namespace param

/// Data of the soliton equation
///   L_V g + 2 alpha S + (2 lambda - beta r) g = 0.
struct SolitonParams {
  ScalarExpr alpha;
  ScalarExpr beta;
  /// May stay the free symbol `lambda`.
  ScalarExpr lambda;
  RConvention r_convention = RConvention::Signed;

  /// alpha, beta and lambda as free symbols.
  static SolitonParams symbolic(RConvention convention = RConvention::Signed);
};

/// Perfect-fluid data: gravitational constant tau, density rho, pressure p
/// and cosmological term mu.
struct FluidParams {
  ScalarExpr tau;
  ScalarExpr rho;
  ScalarExpr p;
  ScalarExpr mu;

  static FluidParams symbolic();
};

}  // namespace sforge
