#pragma once

// Pure-algebra certification of the soliton theorems. Nothing here reads a
// spec: the premises are written as formulas in alpha, beta, lambda, r, mu,
// tau, rho and p, and each conclusion is checked by canonical-form equality
// after substitution.

#include "soliton_forge/verify/record.hpp"

#include <set>
#include <string>
#include <vector>

namespace sforge {

/// Identity records, all expected to hold. General-dimension results use
/// `n`; the spacetime results are stated for n = 4 and always use 4.
/// Throws std::invalid_argument for n < 2.
std::vector<Record> theorem_identity_checks(long n);

/// Cross-check records comparing printed intermediate formulas with an
/// independent derivation from the same premises. A non-zero residual marks
/// a discrepancy; these never affect the exit status.
std::vector<Record> derivation_cross_checks(long n);

/// Every symbol the two lists above may contain: the soliton and fluid
/// parameters plus the opaque derivatives "Kr" and "Xf".
std::vector<std::string> theorem_symbols();

/// Symbols the certification assumes non-zero.
const std::set<Sym>& theorem_nonzero_symbols();

}  // namespace sforge
