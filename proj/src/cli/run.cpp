#include "soliton_forge/cli/run.hpp"

#include "soliton_forge/algebra/parse.hpp"
#include "soliton_forge/cli/pipeline.hpp"
#include "soliton_forge/cli/spec_io.hpp"
#include "soliton_forge/verify/params.hpp"
#include "soliton_forge/verify/theorems.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

namespace sforge {

namespace {

bool needs_spec(const std::string& command) { return command != "theorems"; }
bool uses_theorems(const std::string& command) { return command == "theorems" || command == "report"; }

Bindings bind(const RunConfig& config, const FrameSpec* spec) {
  std::set<std::string> known;
  std::set<Sym> nonzero;
  if (spec != nullptr) {
    known = spec->symbols();
    for (const auto& s : param::all()) known.insert(s);
    nonzero = spec->assume_nonzero;
  }
  if (uses_theorems(config.command)) {
    for (const auto& s : theorem_symbols()) known.insert(s);
    nonzero.insert(theorem_nonzero_symbols().begin(), theorem_nonzero_symbols().end());
  }

  Bindings bindings;
  for (const auto& [name, text] : config.substitutions) {
    if (!is_identifier(name)) throw InputError("--sub: '" + name + "' is not a symbol name");
    if (known.count(name) == 0) throw InputError("--sub: unknown symbol '" + name + "'");
    ScalarExpr value;
    try {
      value = parse_expr(text);
    } catch (const ParseError& e) {
      throw InputError("--sub " + name + ": " + e.what() + " at offset " + std::to_string(e.position()));
    } catch (const DivisionByZero& e) {
      throw InputError("--sub " + name + ": " + e.what());
    }
    for (const auto& s : value.symbols()) {
      if (known.count(s) == 0) throw InputError("--sub " + name + ": unknown symbol '" + s + "' in value");
    }
    if (value.is_zero() && nonzero.count(Sym(name)) > 0) {
      throw InputError("--sub: '" + name + "' is assumed non-zero");
    }
    if (!bindings.emplace(Sym(name), value).second) throw InputError("--sub: '" + name + "' given twice");
  }
  return bindings;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"validate", "connection", "curvature", "axioms",
                                              "soliton",  "fluid",      "theorems",  "report"};
  return names;
}

std::pair<std::string, std::string> split_substitution(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw InputError("--sub expects SYM=EXPR, got '" + text + "'");
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
  };
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

Report build_report(const RunConfig& config) {
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    throw InputError("unknown subcommand '" + config.command + "'");
  }
  if (uses_theorems(config.command) && config.n < 2) throw InputError("--n must be at least 2");

  Report report;
  report.command = config.command;
  report.substitutions = config.substitutions;
  if (uses_theorems(config.command)) report.n = config.n;

  if (!needs_spec(config.command)) {
    if (config.input) throw InputError("theorems takes no spec file");
    const Bindings bindings = bind(config, nullptr);
    report.sections.push_back(theorems_section(config.n));
    report.sections.push_back(cross_checks_section(config.n));
    return bindings.empty() ? report : substitute(report, bindings);
  }

  if (!config.input) throw InputError(config.command + " needs a spec file");
  report.input = *config.input;
  report.r_convention = config.r_convention;

  if (config.command == "validate") {
    const FrameSpec spec = parse_spec_text_unvalidated(read_file(*config.input), *config.input);
    const Bindings bindings = bind(config, &spec);
    const ValidationReport validation = validate(spec);
    report.spec_digest = spec_digest(spec);
    report.sections.push_back(validation_section(spec, validation));
    report.input_error = !validation.ok();
    return bindings.empty() ? report : substitute(report, bindings);
  }

  const FrameSpec spec = parse_spec(*config.input);
  const Bindings bindings = bind(config, &spec);
  report.spec_digest = spec_digest(spec);

  const Connection conn = koszul_connection(spec);
  const bool all = config.command == "report";
  if (all) report.sections.push_back(validation_section(spec, validate(spec)));
  if (all || config.command == "connection" || config.command == "curvature") {
    report.sections.push_back(connection_section(spec, conn));
  }
  if (config.command != "connection") {
    const CurvatureBundle curv = compute_curvature(spec, conn);
    if (all || config.command == "curvature") {
      report.sections.push_back(curvature_section(spec, curv, config.r_convention));
    }
    if (all || config.command == "axioms") report.sections.push_back(axioms_section(spec, conn, curv));
    if (all || config.command == "soliton") {
      report.sections.push_back(soliton_section(spec, conn, curv, config.r_convention));
    }
    if (all || config.command == "fluid") {
      report.sections.push_back(fluid_section(spec, conn, curv, config.r_convention));
    }
  }
  if (all) {
    report.sections.push_back(theorems_section(config.n));
    report.sections.push_back(cross_checks_section(config.n));
  }
  return bindings.empty() ? report : substitute(report, bindings);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = build_report(config);
  } catch (const SpecError& e) {
    err << "soliton-forge: invalid spec (" << e.invariant() << "): " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "soliton-forge: parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "soliton-forge: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    err << "soliton-forge: substitution divides by zero: " << e.what() << "\n";
    return 2;
  }

  const std::string text =
      config.format == OutputFormat::Structured ? render_structured(report) : render_text(report);
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
      err << "soliton-forge: cannot write " << *config.out_path << "\n";
      return 2;
    }
  } else {
    out << text;
  }
  return report.exit_code();
}

}  // namespace sforge
