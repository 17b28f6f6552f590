#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace commcurve::cli;
  CLI::App app{"Exact verification of commuting-matrix models of curves"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::optional<std::string> output;
  std::string input, json, fixture, m;
  long d = 0;
  app.add_option("--input", input, "JSON input file");
  app.add_option("--json", json, "inline JSON input");
  app.add_option("--fixture", fixture, "built-in input document")->check(CLI::IsMember(fixture_names()));
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_option("--seed", opts.seed, "seed for sampled inputs")->capture_default_str();
  app.add_option("--d", d, "degree");
  app.add_option("--m", m, "multiset as a JSON object, e.g. '{\"1\":2}'");
  app.add_flag("--timing", opts.timing, "add wall time to the report");
  const std::map<std::string, std::string> help{
      {"points2mat", "multiplication matrices of distinct plane points"},
      {"ideal2mat", "multiplication matrices of a zero-dimensional ideal"},
      {"verify-pair", "commuting pair checks; polynomial entries need weights k"},
      {"curve2mat", "flat model of a curve ideal"},
      {"verify-model", "check a matrix polynomial model, including at infinity"},
      {"splitting", "splitting type, genus and obstruction of a curve ideal"},
      {"obstruction", "obstruction numbers of a multiset (--m or input)"},
      {"moment", "moment of a point (input, or sampled with --d)"},
      {"md-check", "membership checks for a point (input, or sampled with --d)"},
      {"classify", "smoothness and nondegeneracy of a moment-zero point"},
      {"signature", "signature of the real form for odd --d"},
      {"twisted-cubic", "twisted cubic model for given or seeded parameters"},
      {"fixtures", "run every built-in fixture"},
  };
  for (const auto& name : command_names()) app.add_subcommand(name, help.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  if (app.count("--input")) opts.input = input;
  if (app.count("--json")) opts.json = json;
  if (app.count("--fixture")) opts.fixture = fixture;
  if (app.count("--d")) opts.d = d;
  if (app.count("--m")) opts.m = m;

  const Outcome out = run(opts);
  const std::string text = out.report.dump() + "\n";
  if (output) {
    std::ofstream f(*output);
    if (!f) {
      std::cerr << "cannot write " << *output << "\n";
      return 2;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (out.report.contains("error")) std::cerr << "error at '" << out.report["error"]["path"].get<std::string>()
                                              << "': " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
