#include "soliton_forge/verify/params.hpp"

namespace sforge {

std::vector<std::string> param::all() { return {alpha, beta, lambda, mu, p, r, rho, tau}; }

SolitonParams SolitonParams::symbolic(RConvention convention) {
  return {ScalarExpr::symbol(param::alpha), ScalarExpr::symbol(param::beta), ScalarExpr::symbol(param::lambda),
          convention};
}

FluidParams FluidParams::symbolic() {
  return {ScalarExpr::symbol(param::tau), ScalarExpr::symbol(param::rho), ScalarExpr::symbol(param::p),
          ScalarExpr::symbol(param::mu)};
}

}  // namespace sforge
