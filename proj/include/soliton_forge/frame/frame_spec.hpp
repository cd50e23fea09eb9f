#pragma once

// A manifold presented by a frame f_1 ... f_n whose metric components,
// structure constants and almost-contact tensor phi are all constant in the
// frame. Every vector field the engine handles is frame-constant as well;
// this is the scope restriction the whole pipeline relies on.

#include "soliton_forge/frame/tensor.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sforge {

class SpecError : public std::runtime_error {
 public:
  SpecError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}

  /// Name of the violated invariant, e.g. "jacobi" or "dimension".
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct FrameSpec {
  std::size_t dimension = 0;
  /// metric(i, j) = g(f_i, f_j)
  Matrix metric;
  /// structure(i, j, k) = C^k_ij with [f_i, f_j] = sum_k C^k_ij f_k
  Rank3 structure;
  /// phi(i, j) = phi^i_j with phi f_j = sum_i phi^i_j f_i
  Matrix phi;
  VectorField xi;
  std::set<Sym> assume_nonzero;

  /// Every symbol occurring in metric, structure, phi or xi.
  std::set<std::string> symbols() const;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  bool lorentzian() const { return negative == 1 && positive >= 1; }
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<std::string> warnings;
  /// Present only when every metric entry is a rational constant.
  std::optional<Signature> signature;

  bool ok() const;
  const ValidationCheck* first_failure() const;
};

/// Structural checks (dimension >= 2, component counts) throw SpecError; the
/// algebraic invariants are reported in order: symmetry, nondegeneracy,
/// antisymmetry, jacobi, signature.
ValidationReport validate(const FrameSpec& spec);

/// validate() and throw SpecError naming the first failing invariant.
void require_valid(const FrameSpec& spec);

/// Residual of the Jacobi identity at (i, j, k, l); zero for a Lie algebra.
ScalarExpr jacobi_residual(const FrameSpec& spec, std::size_t i, std::size_t j, std::size_t k,
                           std::size_t l);

/// Exact signature from the sign changes of the characteristic polynomial;
/// nullopt when some entry is symbolic.
std::optional<Signature> metric_signature(const Matrix& metric);

CoVector eta_from_xi(const FrameSpec& spec);

ScalarExpr pairing(const FrameSpec& spec, const VectorField& x, const VectorField& y);
ScalarExpr apply(const CoVector& form, const VectorField& x);
VectorField apply_phi(const FrameSpec& spec, const VectorField& x);

VectorField lie_bracket(const FrameSpec& spec, const VectorField& x, const VectorField& y);

/// (L_V g)_ij = -g([V, f_i], f_j) - g(f_i, [V, f_j]).
Matrix lie_derivative_metric(const FrameSpec& spec, const VectorField& v);

}  // namespace sforge
