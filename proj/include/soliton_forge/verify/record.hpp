#pragma once

// Verification records: one identity, its residual components, and the
// verdict derived from them.

#include "soliton_forge/frame/tensor.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sforge {

enum class Status { Holds, Fails, Conditional, Unchecked, Info };

enum class RecordKind {
  Check,       ///< counts toward the exit status
  Identity,    ///< a certified symbolic identity; also counts
  CrossCheck,  ///< compares a printed formula against an independent derivation
  Relation,    ///< an equation among free parameters; reported, not counted
  Info,        ///< values only
};

const char* to_string(Status status);
const char* to_string(RecordKind kind);

/// A labelled expression: residual component or reported value.
struct Residual {
  std::string label;
  ScalarExpr value;
};

/// Polynomial constraint under which every residual vanishes.
struct Condition {
  /// Primitive polynomial; the condition reads `polynomial = 0`.
  Poly polynomial;
  /// The symbol when the condition is univariate.
  std::optional<std::string> variable;
  /// Distinct rational roots, ascending (univariate conditions only).
  std::vector<Rational> roots;
  /// Linear factors of the rational roots plus any remaining cofactor.
  std::vector<Poly> factors;

  std::string to_string() const;
};

/// Common factor of all residual numerators, after dropping monomial factors
/// in symbols assumed non-zero. nullopt when that factor is a constant.
/// Univariate conditions are split into rational roots; multivariate ones are
/// reported unfactored.
std::optional<Condition> common_condition(const std::vector<ScalarExpr>& residuals,
                                          const std::set<Sym>& assume_nonzero);

struct Record {
  std::string id;
  std::string title;
  RecordKind kind = RecordKind::Check;
  Status status = Status::Holds;
  /// Non-zero residual components only; empty iff the identity holds.
  std::vector<Residual> residuals;
  std::optional<Condition> condition;
  std::vector<Residual> values;
  std::vector<std::string> notes;
  /// For rank checks: the matrix whose rank is compared to `expected_rank`.
  std::optional<Matrix> rank_subject;
  std::size_t expected_rank = 0;
  /// Symbols whose monomial factors are dropped from conditions.
  std::set<Sym> assume_nonzero;

  /// Failing Check or Identity records make a run fail.
  bool is_hard_failure() const;
};

/// Builds a record from all residual components (zeros are dropped) and
/// classifies it.
Record make_record(std::string id, std::string title, RecordKind kind, std::vector<Residual> residuals,
                   const std::set<Sym>& assume_nonzero);

/// Re-derives status and condition from the stored residuals.
void classify(Record& record);

/// Substitutes into residuals, values and rank subject, then re-classifies.
Record substitute(const Record& record, const Bindings& bindings);

/// Residual list for a matrix, labelled "(i,j)" one-based.
std::vector<Residual> matrix_residuals(const Matrix& m);

/// Solves the equations, each affine in `x`, for x. nullopt when no equation
/// involves x, when one is not affine in x, or when the solution from the first
/// equation does not satisfy the others.
std::optional<ScalarExpr> solve_linear(const std::vector<ScalarExpr>& equations, const Sym& x);

std::string index_label(std::initializer_list<std::size_t> zero_based);

}  // namespace sforge
