#include "soliton_forge/cli/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace sforge {

namespace {

using ordered_json = nlohmann::ordered_json;

template <std::size_t Rank>
std::vector<IndexedValue> collect(const Tensor<Rank>& t) {
  std::vector<IndexedValue> out;
  const auto comps = t.components();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].is_zero()) continue;
    const auto idx = t.index_of(k);
    IndexedValue entry;
    for (std::size_t i : idx) entry.index.push_back(i + 1);
    entry.value = comps[k];
    out.push_back(std::move(entry));
  }
  return out;
}

std::string index_text(const std::vector<std::size_t>& index) {
  std::string out = "(";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(index[k]);
  }
  return out + ")";
}

ordered_json residuals_json(const std::vector<Residual>& items) {
  ordered_json out = ordered_json::array();
  for (const auto& r : items) out.push_back({{"label", r.label}, {"value", r.value.to_string()}});
  return out;
}

ordered_json condition_json(const Condition& c) {
  ordered_json out;
  out["polynomial"] = c.polynomial.to_string();
  out["text"] = c.to_string();
  out["variable"] = c.variable ? ordered_json(*c.variable) : ordered_json(nullptr);
  ordered_json roots = ordered_json::array();
  for (const auto& root : c.roots) roots.push_back(to_string(root));
  out["roots"] = std::move(roots);
  ordered_json factors = ordered_json::array();
  for (const auto& f : c.factors) factors.push_back(f.to_string());
  out["factors"] = std::move(factors);
  return out;
}

ordered_json record_json(const Record& r) {
  ordered_json out;
  out["id"] = r.id;
  out["title"] = r.title;
  out["kind"] = to_string(r.kind);
  out["status"] = to_string(r.status);
  out["condition"] = r.condition ? condition_json(*r.condition) : ordered_json(nullptr);
  out["residuals"] = residuals_json(r.residuals);
  out["values"] = residuals_json(r.values);
  out["notes"] = r.notes;
  return out;
}

ordered_json counts_json(const RecordCounts& c) {
  return {{"holds", c.holds},           {"fails", c.fails}, {"conditional", c.conditional},
          {"unchecked", c.unchecked},   {"info", c.info},   {"hard_failures", c.hard_failures}};
}

std::string roots_text(const Condition& c) {
  if (!c.variable || c.roots.empty()) return "";
  std::string out = "  (" + *c.variable + " in {";
  for (std::size_t k = 0; k < c.roots.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(c.roots[k]);
  }
  return out + "})";
}

}  // namespace

RecordCounts Report::counts() const {
  RecordCounts c;
  for (const auto& section : sections) {
    for (const auto& r : section.records) {
      switch (r.status) {
        case Status::Holds: ++c.holds; break;
        case Status::Fails: ++c.fails; break;
        case Status::Conditional: ++c.conditional; break;
        case Status::Unchecked: ++c.unchecked; break;
        case Status::Info: ++c.info; break;
      }
      if (r.is_hard_failure()) ++c.hard_failures;
    }
  }
  return c;
}

int Report::exit_code() const {
  if (input_error) return 2;
  return has_hard_failure() ? 1 : 0;
}

Listing make_listing(std::string name, std::string meaning, std::vector<IndexedValue> entries) {
  return Listing{std::move(name), std::move(meaning), std::move(entries)};
}

std::vector<IndexedValue> nonzero_entries(const Matrix& m) { return collect(m); }
std::vector<IndexedValue> nonzero_entries(const Rank3& t) { return collect(t); }
std::vector<IndexedValue> nonzero_entries(const Rank4& t) { return collect(t); }

Report substitute(const Report& report, const Bindings& bindings) {
  Report out = report;
  for (auto& section : out.sections) {
    for (auto& v : section.values) v.value = v.value.substitute(bindings);
    for (auto& listing : section.listings) {
      std::vector<IndexedValue> kept;
      for (auto& e : listing.entries) {
        ScalarExpr value = e.value.substitute(bindings);
        if (!value.is_zero()) kept.push_back({e.index, std::move(value)});
      }
      listing.entries = std::move(kept);
    }
    for (auto& r : section.records) r = substitute(r, bindings);
  }
  return out;
}

std::string render_structured(const Report& report) {
  ordered_json doc;
  doc["command"] = report.command;
  if (report.input) doc["input"] = *report.input;
  if (report.spec_digest) doc["spec_sha256"] = *report.spec_digest;
  if (report.n) doc["n"] = *report.n;
  if (report.r_convention) doc["r_convention"] = to_string(*report.r_convention);
  ordered_json subs = ordered_json::array();
  for (const auto& [sym, expr] : report.substitutions) subs.push_back({{"symbol", sym}, {"value", expr}});
  doc["substitutions"] = std::move(subs);

  ordered_json sections = ordered_json::array();
  for (const auto& section : report.sections) {
    ordered_json s;
    s["name"] = section.name;
    s["values"] = residuals_json(section.values);
    ordered_json listings = ordered_json::array();
    for (const auto& listing : section.listings) {
      ordered_json entries = ordered_json::array();
      for (const auto& e : listing.entries) entries.push_back({{"index", e.index}, {"value", e.value.to_string()}});
      listings.push_back({{"name", listing.name}, {"meaning", listing.meaning}, {"entries", std::move(entries)}});
    }
    s["listings"] = std::move(listings);
    ordered_json records = ordered_json::array();
    for (const auto& r : section.records) records.push_back(record_json(r));
    s["records"] = std::move(records);
    s["notes"] = section.notes;
    sections.push_back(std::move(s));
  }
  doc["sections"] = std::move(sections);
  doc["summary"] = counts_json(report.counts());
  doc["exit_status"] = report.exit_code();
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "soliton-forge " << report.command << "\n";
  if (report.input) out << "input: " << *report.input << "\n";
  if (report.spec_digest) out << "spec sha256: " << *report.spec_digest << "\n";
  if (report.n) out << "n: " << *report.n << "\n";
  if (report.r_convention) out << "r convention: " << to_string(*report.r_convention) << "\n";
  if (!report.substitutions.empty()) {
    out << "substitutions:";
    for (const auto& [sym, expr] : report.substitutions) out << " " << sym << "=" << expr;
    out << "\n";
  }

  for (const auto& section : report.sections) {
    out << "\n== " << section.name << " ==\n";
    for (const auto& v : section.values) out << "  " << v.label << " = " << v.value.to_string() << "\n";
    for (const auto& listing : section.listings) {
      out << "  " << listing.name << "  [" << listing.meaning << "]\n";
      if (listing.entries.empty()) out << "    (all zero)\n";
      for (const auto& e : listing.entries) out << "    " << index_text(e.index) << " " << e.value.to_string() << "\n";
    }
    for (const auto& r : section.records) {
      out << "  " << std::left << std::setw(12) << to_string(r.status) << " " << std::setw(20) << r.id << " "
          << r.title;
      if (r.kind != RecordKind::Check) out << "  <" << to_string(r.kind) << ">";
      out << "\n";
      if (r.condition) out << "      condition: " << r.condition->to_string() << roots_text(*r.condition) << "\n";
      for (const auto& v : r.values) out << "      " << v.label << " = " << v.value.to_string() << "\n";
      if (r.status != Status::Holds) {
        for (const auto& res : r.residuals) out << "      residual " << res.label << ": " << res.value.to_string() << "\n";
      }
      for (const auto& note : r.notes) out << "      note: " << note << "\n";
    }
    for (const auto& note : section.notes) out << "  note: " << note << "\n";
  }

  const RecordCounts c = report.counts();
  out << "\nsummary: " << c.holds << " holds, " << c.fails << " fail, " << c.conditional << " conditional, "
      << c.unchecked << " unchecked, " << c.info << " info; " << c.hard_failures << " hard failure"
      << (c.hard_failures == 1 ? "" : "s") << "; exit " << report.exit_code() << "\n";
  return out.str();
}

}  // namespace sforge
