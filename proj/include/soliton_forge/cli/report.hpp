#pragma once

// The report a subcommand produces: named sections of listings (tensor
// components), scalar values and verification records. Rendering is
// deterministic; the structured form is JSON with keys in a fixed order.

#include "soliton_forge/geometry/curvature.hpp"
#include "soliton_forge/verify/record.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sforge {

/// Non-zero components of a tensor, one-based indices.
struct Listing {
  std::string name;
  /// How to read an index tuple, e.g. "(i,j,k) -> Gamma^k_ij".
  std::string meaning;
  std::vector<IndexedValue> entries;
};

struct Section {
  std::string name;
  std::vector<Residual> values;
  std::vector<Listing> listings;
  std::vector<Record> records;
  std::vector<std::string> notes;
};

struct RecordCounts {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t conditional = 0;
  std::size_t unchecked = 0;
  std::size_t info = 0;
  std::size_t hard_failures = 0;
};

struct Report {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> spec_digest;
  std::optional<long> n;
  std::optional<RConvention> r_convention;
  /// As given on the command line, in order.
  std::vector<std::pair<std::string, std::string>> substitutions;
  std::vector<Section> sections;
  /// Forces exit status 2 (an invalid spec under `validate`).
  bool input_error = false;

  RecordCounts counts() const;
  bool has_hard_failure() const { return counts().hard_failures > 0; }
  /// 2 on input error, 1 on any hard failure, 0 otherwise.
  int exit_code() const;
};

Listing make_listing(std::string name, std::string meaning, std::vector<IndexedValue> entries);

/// Non-zero entries of a tensor, in lexicographic index order.
std::vector<IndexedValue> nonzero_entries(const Matrix& m);
std::vector<IndexedValue> nonzero_entries(const Rank3& t);
std::vector<IndexedValue> nonzero_entries(const Rank4& t);

/// Applies bindings to every listing, value and record. Listing entries that
/// become zero are dropped; records are re-classified.
Report substitute(const Report& report, const Bindings& bindings);

std::string render_structured(const Report& report);
std::string render_text(const Report& report);

}  // namespace sforge
