#include "soliton_forge/cli/report.hpp"
#include "soliton_forge/cli/run.hpp"
#include "soliton_forge/cli/spec_io.hpp"
#include "support/oracles.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sforge {
namespace {

using testing::fixture_path;

const char* const kFixtures[] = {"lps_example.spec", "minkowski4.spec", "heisenberg3.spec", "so3_frame.spec"};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(RunConfig config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config_for(const std::string& command, const std::string& fixture = "") {
  RunConfig c;
  c.command = command;
  if (!fixture.empty()) c.input = fixture_path(fixture);
  return c;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sforge_test_" + name);
  std::ofstream(path) << content;
  return path;
}

TEST(SpecIo, FixturesMatchHandBuiltSpecs) {
  const auto same = [](const FrameSpec& a, const FrameSpec& b) {
    return a.dimension == b.dimension && a.metric == b.metric && a.structure == b.structure && a.phi == b.phi &&
           a.xi == b.xi && a.assume_nonzero == b.assume_nonzero;
  };
  EXPECT_TRUE(same(parse_spec(fixture_path("lps_example.spec")), testing::lps_example()));
  EXPECT_TRUE(same(parse_spec(fixture_path("minkowski4.spec")), testing::minkowski4()));
  EXPECT_TRUE(same(parse_spec(fixture_path("heisenberg3.spec")), testing::heisenberg3()));
  EXPECT_TRUE(same(parse_spec(fixture_path("so3_frame.spec")), testing::so3_frame()));
}

TEST(SpecIo, PrintParseRoundTrip) {
  for (const char* name : kFixtures) {
    const FrameSpec spec = parse_spec(fixture_path(name));
    const std::string printed = print_spec(spec);
    const FrameSpec again = parse_spec_text(printed);
    EXPECT_EQ(print_spec(again), printed) << name;
    EXPECT_EQ(again.structure, spec.structure) << name;
    EXPECT_EQ(spec_digest(again), spec_digest(spec)) << name;
  }
}

TEST(SpecIo, DigestIsSha256Hex) {
  const std::string d = spec_digest(testing::heisenberg3());
  EXPECT_EQ(d.size(), 64U);
  EXPECT_EQ(d.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_NE(d, spec_digest(testing::so3_frame()));
}

TEST(SpecIo, EmptyFileIsParseError) {
  const auto path = temp_file("empty.spec", "");
  EXPECT_THROW(parse_spec(path.string()), ParseError);
}

TEST(SpecIo, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_spec_text("{\n  \"dimension\": 2,\n  \"metric\": [1, 0,, 0]\n}", "bad.spec");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("bad.spec:3:"), std::string::npos) << err.what();
  }
}

TEST(SpecIo, SemanticErrorsNameTheField) {
  const auto expect_field = [](const std::string& text, const std::string& field) {
    try {
      parse_spec_text(text);
      FAIL() << "expected ParseError for " << field;
    } catch (const ParseError& err) {
      EXPECT_NE(std::string(err.what()).find(field), std::string::npos) << err.what();
    }
  };
  const std::string tail = R"("phi": [0,0,0,0], "xi": ["1","0"])";
  expect_field(R"({"dimension": 2, "metric": [1,0,0], )" + tail + "}", "metric");
  expect_field(R"({"dimension": 2, "metric": [1,0,0,1], "colour": 1, )" + tail + "}", "colour");
  expect_field(R"({"dimension": 2, "metric": [1,0,0,1], "brackets": [{"i": 1, "j": 1, "coeffs": [0,1]}], )" + tail + "}",
               "brackets[1]");
  expect_field(R"({"dimension": 2, "metric": [1,0,0,"a +"], )" + tail + "}", "metric[4]");
  expect_field(R"({"metric": [1,0,0,1], )" + tail + "}", "dimension");
  expect_field(R"({"dimension": 2, "metric": [1,0,0,1], "brackets": [{"i": 1, "j": 2, "coeffs": [0,1]}, {"i": 2, "j": 1, "coeffs": [0,1]}], )" +
                   tail + "}",
               "brackets[2]");
}

TEST(SpecIo, JacobiPerturbationRaisesSpecError) {
  // so(3) with one extra bracket coefficient is no longer a Lie algebra.
  const std::string perturbed = R"({
    "dimension": 3,
    "metric": [1,0,0, 0,1,0, 0,0,1],
    "brackets": [
      {"i": 2, "j": 3, "coeffs": [1, 0, 0]},
      {"i": 3, "j": 1, "coeffs": [0, 1, 0]},
      {"i": 1, "j": 2, "coeffs": [1, 0, 2]}
    ],
    "phi": [1,0,0, 0,1,0, 0,0,0],
    "xi": [0, 0, 1]
  })";
  try {
    parse_spec_text(perturbed);
    FAIL() << "expected SpecError";
  } catch (const SpecError& err) {
    EXPECT_EQ(err.invariant(), "jacobi");
  }
  EXPECT_NO_THROW(parse_spec_text_unvalidated(perturbed));
}

TEST(Run, ExitCodesOnFixtures) {
  EXPECT_EQ(run_cli(config_for("validate", "lps_example.spec")).code, 0);
  EXPECT_EQ(run_cli(config_for("connection", "heisenberg3.spec")).code, 0);
  EXPECT_EQ(run_cli(config_for("curvature", "lps_example.spec")).code, 0);
  EXPECT_EQ(run_cli(config_for("curvature", "minkowski4.spec")).code, 0);
  // Codazzi fails on the Heisenberg frame.
  EXPECT_EQ(run_cli(config_for("curvature", "heisenberg3.spec")).code, 1);
  // The Riemannian almost-contact metric identity fails on a Lorentzian frame.
  EXPECT_EQ(run_cli(config_for("axioms", "lps_example.spec")).code, 1);
  EXPECT_EQ(run_cli(config_for("theorems")).code, 0);
}

TEST(Run, SubstitutionExample) {
  RunConfig c = config_for("axioms", "lps_example.spec");
  c.substitutions = {{"a", "1"}};
  c.format = OutputFormat::Structured;
  const Outcome o = run_cli(c);
  EXPECT_EQ(o.code, 1);
  const auto doc = nlohmann::json::parse(o.out);
  const auto& records = doc["sections"][0]["records"];
  for (const auto& r : records) {
    if (r["id"] == "2.4") EXPECT_EQ(r["status"], "holds");
    if (r["id"] == "2.5") {
      EXPECT_EQ(r["status"], "fails");
      for (const auto& res : r["residuals"]) EXPECT_EQ(res["value"], "2");
    }
  }
}

TEST(Run, InputErrorsExitTwo) {
  RunConfig unknown = config_for("axioms", "lps_example.spec");
  unknown.substitutions = {{"zeta", "1"}};
  EXPECT_EQ(run_cli(unknown).code, 2);

  RunConfig zero = config_for("soliton", "lps_example.spec");
  zero.substitutions = {{"alpha", "0"}};
  EXPECT_EQ(run_cli(zero).code, 2);

  RunConfig garbled = config_for("axioms", "lps_example.spec");
  garbled.substitutions = {{"a", "1 +"}};
  EXPECT_EQ(run_cli(garbled).code, 2);

  RunConfig missing = config_for("curvature");
  EXPECT_EQ(run_cli(missing).code, 2);

  RunConfig nofile = config_for("curvature");
  nofile.input = "/nonexistent/none.spec";
  EXPECT_EQ(run_cli(nofile).code, 2);

  RunConfig small_n = config_for("theorems");
  small_n.n = 1;
  EXPECT_EQ(run_cli(small_n).code, 2);

  EXPECT_THROW(split_substitution("a1"), InputError);
  EXPECT_EQ(split_substitution(" a = 2*b "), (std::pair<std::string, std::string>{"a", "2*b"}));
}

TEST(Run, InvalidSpecUnderValidateExitsTwoWithReport) {
  const auto path = temp_file("asym.spec", R"({"dimension": 2, "metric": [1,1,0,1], "phi": [0,0,0,0], "xi": [1,0]})");
  RunConfig c = config_for("validate");
  c.input = path.string();
  const Outcome o = run_cli(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("symmetry"), std::string::npos);
  c.command = "curvature";
  const Outcome rejected = run_cli(c);
  EXPECT_EQ(rejected.code, 2);
  EXPECT_NE(rejected.err.find("symmetry"), std::string::npos);
}

TEST(Run, StructuredReportIsDeterministic) {
  for (const char* name : kFixtures) {
    RunConfig c = config_for("report", name);
    c.format = OutputFormat::Structured;
    const Outcome first = run_cli(c);
    const Outcome second = run_cli(c);
    EXPECT_EQ(first.out, second.out) << name;
    EXPECT_TRUE(nlohmann::json::accept(first.out));
  }
}

TEST(Run, OutPathReceivesReport) {
  const auto path = std::filesystem::temp_directory_path() / "sforge_test_out.json";
  RunConfig c = config_for("theorems");
  c.format = OutputFormat::Structured;
  c.out_path = path.string();
  const Outcome o = run_cli(c);
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["summary"]["hard_failures"], 0);
}

TEST(Run, CurvatureListsTheExampleValues) {
  RunConfig c = config_for("curvature", "lps_example.spec");
  c.r_convention = RConvention::Unsigned;
  const Outcome o = run_cli(c);
  EXPECT_NE(o.out.find("(1,1,4) a\n"), std::string::npos);
  EXPECT_NE(o.out.find("(1,4,4,1) -a^2\n"), std::string::npos);
  EXPECT_NE(o.out.find("(4,4) -3*a^2\n"), std::string::npos);
  EXPECT_NE(o.out.find("r_signed = 12*a^2"), std::string::npos);
  EXPECT_NE(o.out.find("r (unsigned) = 6*a^2"), std::string::npos);
}

TEST(Report, SubstituteDropsVanishingEntries) {
  Report r;
  r.command = "curvature";
  Section s;
  s.name = "x";
  s.listings.push_back(make_listing("L", "m", {{{1}, parse_expr("a - 1")}, {{2}, parse_expr("a")}}));
  r.sections.push_back(s);
  const Report out = substitute(r, {{Sym("a"), ScalarExpr(1)}});
  ASSERT_EQ(out.sections[0].listings[0].entries.size(), 1U);
  EXPECT_EQ(out.sections[0].listings[0].entries[0].index, std::vector<std::size_t>{2});
}

}  // namespace
}  // namespace sforge
