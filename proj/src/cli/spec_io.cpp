#include "soliton_forge/cli/spec_io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace sforge {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(source_ + ": field '" + field + "': " + message, 0);
  }

  const json& require(const json& doc, const char* key) const {
    const auto it = doc.find(key);
    if (it == doc.end()) fail(key, "missing");
    return *it;
  }

  std::size_t index(const json& value, const std::string& field) const {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    const auto v = value.get<long long>();
    if (v < 1) fail(field, "indices start at 1");
    return static_cast<std::size_t>(v);
  }

  ScalarExpr expr(const json& value, const std::string& field) const {
    if (value.is_number_integer()) return ScalarExpr(static_cast<long>(value.get<long long>()));
    if (!value.is_string()) fail(field, "expected an expression string or integer");
    try {
      return parse_expr(value.get<std::string>());
    } catch (const ParseError& e) {
      fail(field, std::string(e.what()) + " at offset " + std::to_string(e.position()));
    } catch (const DivisionByZero& e) {
      fail(field, e.what());
    }
  }

  std::vector<ScalarExpr> vector(const json& value, const std::string& field, std::size_t n) const {
    if (!value.is_array()) fail(field, "expected an array");
    if (value.size() != n) fail(field, "expected " + std::to_string(n) + " entries, got " + std::to_string(value.size()));
    std::vector<ScalarExpr> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(expr(value[i], field + "[" + std::to_string(i + 1) + "]"));
    return out;
  }

  Matrix matrix(const json& value, const std::string& field, std::size_t n) const {
    if (!value.is_array()) fail(field, "expected an array");
    Matrix out(n);
    const bool nested = !value.empty() && value[0].is_array();
    if (nested) {
      if (value.size() != n) fail(field, "expected " + std::to_string(n) + " rows, got " + std::to_string(value.size()));
      for (std::size_t i = 0; i < n; ++i) {
        const auto row = vector(value[i], field + "[" + std::to_string(i + 1) + "]", n);
        for (std::size_t j = 0; j < n; ++j) out(i, j) = row[j];
      }
    } else {
      const auto flat = vector(value, field, n * n);
      for (std::size_t k = 0; k < n * n; ++k) out(k / n, k % n) = flat[k];
    }
    return out;
  }

 private:
  std::string source_;
};

const std::array<const char*, 7> kFields{"dimension", "metric", "brackets", "phi", "xi", "assume_nonzero", "description"};

}  // namespace

FrameSpec parse_spec_text_unvalidated(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte offset -> line and column
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto before = text.substr(0, offset);
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
    const std::size_t last_newline = before.rfind('\n');
    const std::size_t column = offset - (last_newline == std::string_view::npos ? 0 : last_newline + 1) + 1;
    std::string message = e.what();
    if (const auto colon = message.rfind(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message, offset);
  }

  const Reader reader(source);
  if (!doc.is_object()) reader.fail("<root>", "expected an object");
  for (const auto& item : doc.items()) {
    if (std::find_if(kFields.begin(), kFields.end(), [&](const char* f) { return item.key() == f; }) == kFields.end()) {
      reader.fail(item.key(), "unknown field");
    }
  }

  FrameSpec spec;
  const json& dim = reader.require(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 2 || dim.get<long long>() > 16) {
    reader.fail("dimension", "expected an integer between 2 and 16");
  }
  const auto n = static_cast<std::size_t>(dim.get<long long>());
  spec.dimension = n;
  spec.metric = reader.matrix(reader.require(doc, "metric"), "metric", n);
  spec.phi = reader.matrix(reader.require(doc, "phi"), "phi", n);
  spec.xi = VectorField(reader.vector(reader.require(doc, "xi"), "xi", n));

  spec.structure = Rank3(n);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  if (const auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array()) reader.fail("brackets", "expected an array");
    for (std::size_t b = 0; b < it->size(); ++b) {
      const std::string field = "brackets[" + std::to_string(b + 1) + "]";
      const json& entry = (*it)[b];
      if (!entry.is_object()) reader.fail(field, "expected an object with i, j and coeffs");
      for (const auto& item : entry.items()) {
        if (item.key() != "i" && item.key() != "j" && item.key() != "coeffs") {
          reader.fail(field + "." + item.key(), "unknown field");
        }
      }
      const std::size_t i = reader.index(reader.require(entry, "i"), field + ".i");
      const std::size_t j = reader.index(reader.require(entry, "j"), field + ".j");
      if (i > n || j > n) reader.fail(field, "index exceeds the dimension");
      if (i == j) reader.fail(field, "a bracket needs two distinct frame fields");
      if (seen[i - 1][j - 1]) reader.fail(field, "bracket given twice");
      seen[i - 1][j - 1] = seen[j - 1][i - 1] = true;
      const auto coeffs = reader.vector(reader.require(entry, "coeffs"), field + ".coeffs", n);
      for (std::size_t k = 0; k < n; ++k) {
        spec.structure(i - 1, j - 1, k) = coeffs[k];
        spec.structure(j - 1, i - 1, k) = -coeffs[k];
      }
    }
  }

  if (const auto it = doc.find("assume_nonzero"); it != doc.end()) {
    if (!it->is_array()) reader.fail("assume_nonzero", "expected an array of symbol names");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& name = (*it)[k];
      const std::string field = "assume_nonzero[" + std::to_string(k + 1) + "]";
      if (!name.is_string() || !is_identifier(name.get<std::string>())) reader.fail(field, "expected a symbol name");
      spec.assume_nonzero.insert(Sym(name.get<std::string>()));
    }
  }
  if (const auto it = doc.find("description"); it != doc.end() && !it->is_string()) {
    reader.fail("description", "expected a string");
  }
  return spec;
}

FrameSpec parse_spec_text(std::string_view text, const std::string& source) {
  FrameSpec spec = parse_spec_text_unvalidated(text, source);
  require_valid(spec);
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FrameSpec parse_spec(const std::string& path) { return parse_spec_text(read_file(path), path); }

std::string print_spec(const FrameSpec& spec) {
  const std::size_t n = spec.dimension;
  const auto matrix = [n](const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    return rows;
  };

  ordered_json doc;
  doc["dimension"] = n;
  doc["metric"] = matrix(spec.metric);
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool any = false;
      ordered_json coeffs = ordered_json::array();
      for (std::size_t k = 0; k < n; ++k) {
        any = any || !spec.structure(i, j, k).is_zero();
        coeffs.push_back(spec.structure(i, j, k).to_string());
      }
      if (any) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  doc["phi"] = matrix(spec.phi);
  ordered_json xi = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) xi.push_back(spec.xi[i].to_string());
  doc["xi"] = std::move(xi);
  ordered_json nonzero = ordered_json::array();
  for (const auto& s : spec.assume_nonzero) nonzero.push_back(s.name());
  doc["assume_nonzero"] = std::move(nonzero);
  return doc.dump(2) + "\n";
}

std::string spec_digest(const FrameSpec& spec) {
  const std::string text = print_spec(spec);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xf];
  }
  return out;
}

}  // namespace sforge
