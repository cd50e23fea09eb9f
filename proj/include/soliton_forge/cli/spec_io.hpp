#pragma once

// Spec files: a JSON document
//
//   {
//     "dimension": 4,
//     "metric": [["1", "0", ...], ...],          rows of expression strings
//     "brackets": [{"i": 1, "j": 4, "coeffs": ["a", "0", "0", "0"]}, ...],
//     "phi": [[...], ...],
//     "xi": ["0", "0", "0", "1"],
//     "assume_nonzero": ["alpha", "beta", "tau"]
//   }
//
// Bracket indices are one-based; each entry gives [f_i, f_j] = sum_k coeffs[k] f_k
// and implies the antisymmetric partner. Unlisted brackets are zero. Matrices
// may also be given as flat row-major arrays of n*n entries, and integers may
// stand in for expression strings. An optional "description" string is ignored.

#include "soliton_forge/algebra/parse.hpp"
#include "soliton_forge/frame/frame_spec.hpp"

#include <string>
#include <string_view>

namespace sforge {

/// Parses without running validate(); structural problems still throw
/// ParseError. `source` names the input in diagnostics.
FrameSpec parse_spec_text_unvalidated(std::string_view text, const std::string& source = "<input>");

/// Parses and requires every invariant: ParseError for malformed documents
/// (with line and column, or the offending field), SpecError naming the
/// violated invariant otherwise.
FrameSpec parse_spec_text(std::string_view text, const std::string& source = "<input>");

/// Reads `path` and calls parse_spec_text. Unreadable files are ParseErrors.
FrameSpec parse_spec(const std::string& path);
std::string read_file(const std::string& path);

/// Canonical rendering; parse_spec_text(print_spec(s)) reproduces s.
std::string print_spec(const FrameSpec& spec);

/// Lower-case hex SHA-256 of print_spec(spec).
std::string spec_digest(const FrameSpec& spec);

}  // namespace sforge
