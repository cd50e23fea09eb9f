#pragma once

// The LP-Sasakian structure identities, each evaluated componentwise on the
// frame basis. X, Y, Z range over f_1 ... f_n.

#include "soliton_forge/geometry/curvature.hpp"
#include "soliton_forge/verify/record.hpp"

#include <vector>

namespace sforge {

/// One record per structure identity, ids "2.1a" ... "2.14". Residuals are
/// left-hand side minus right-hand side; labels give the one-based frame
/// indices, with the output component last for vector-valued identities.
///
/// Two extra cross-check records ("2.2-lp", "2.3-lp") test the Lorentzian
/// forms g(phi X, phi Y) = g(X,Y) + eta(X) eta(Y) and g(X, phi Y) = g(phi X, Y),
/// which are the versions compatible with eta(xi) = -1.
std::vector<Record> lps_axiom_battery(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv);

}  // namespace sforge
