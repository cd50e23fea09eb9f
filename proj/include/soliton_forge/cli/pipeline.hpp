#pragma once

// Section builders behind each subcommand. All symbolic work happens here;
// substitutions are applied to the finished report by the caller.

#include "soliton_forge/cli/report.hpp"
#include "soliton_forge/frame/frame_spec.hpp"
#include "soliton_forge/geometry/connection.hpp"

namespace sforge {

/// One record per invariant, plus signature and warnings as notes.
Section validation_section(const FrameSpec& spec, const ValidationReport& validation);

Section connection_section(const FrameSpec& spec, const Connection& conn);

/// Riemann (i < j only), Ricci, Q and nabla S listings; both scalar
/// curvatures; identity, cross-computation and Codazzi-type records.
Section curvature_section(const FrameSpec& spec, const CurvatureBundle& curv, RConvention convention);

Section axioms_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv);
Section soliton_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                        RConvention convention);
Section fluid_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                      RConvention convention);

Section theorems_section(long n);
Section cross_checks_section(long n);

}  // namespace sforge
