#include "soliton_forge/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature and soliton verification for frame-presented manifolds", "soliton-forge"};

  sforge::RunConfig config;
  std::string input;
  std::vector<std::string> subs;
  std::string out_path;

  const std::map<std::string, sforge::RConvention> conventions{{"signed", sforge::RConvention::Signed},
                                                                {"unsigned", sforge::RConvention::Unsigned}};
  const std::map<std::string, sforge::OutputFormat> formats{{"text", sforge::OutputFormat::Text},
                                                           {"structured", sforge::OutputFormat::Structured}};

  app.add_option("command", config.command, "validate, connection, curvature, axioms, soliton, fluid, theorems or report")
      ->required()
      ->check(CLI::IsMember(sforge::subcommands()));
  app.add_option("spec", input, "spec file (not used by theorems)");
  app.add_option("--r-convention", config.r_convention, "scalar curvature convention")
      ->transform(CLI::CheckedTransformer(conventions))
      ->default_str("signed");
  app.add_option("--sub", subs, "substitute SYM=EXPR after computing (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(formats))
      ->default_str("text");
  app.add_option("--n", config.n, "dimension for the theorem checks")->default_str("4");
  app.add_option("--out", out_path, "write the report here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& s : subs) config.substitutions.push_back(sforge::split_substitution(s));
  } catch (const sforge::InputError& e) {
    std::cerr << "soliton-forge: " << e.what() << "\n";
    return 2;
  }
  if (!input.empty()) config.input = input;
  if (!out_path.empty()) config.out_path = out_path;
  return sforge::run(config, std::cout, std::cerr);
}
