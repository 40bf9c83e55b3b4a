// toristack: both quotient presentations of a toric DM stack and the
// certificate relating them.
//
//   toristack <subcommand> <input-file> [--json] [--jobs N] [--fan-complete-assert]
//
// Exit status: 0 all checks pass, 1 a check failed, 2 the input could not be
// used.

#include <toristack/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kInputError = 2;

std::string load(const std::string& where) {
  if (std::filesystem::is_regular_file(where)) {
    std::ifstream in(where, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in && !in.eof()) throw toristack::InvalidInput("cannot read " + where);
    return ss.str();
  }
  if (auto text = toristack::fixture_text(where)) return *text;
  throw toristack::InvalidInput("no such file or bundled fixture: " + where);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotient presentations of toric Deligne-Mumford stacks from labelled polytopes and stacky fans"};
  app.require_subcommand(1);
  app.footer("Bundled fixtures may be named instead of a file: p2_labels_1_1_2, p2_labels_2_2_2, wp112,\n"
             "interval_unlabelled, conehead_<k>.");

  std::string input;
  bool as_json = false, assert_complete = false;
  std::size_t jobs = 1;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check the input (polytope or stacky fan)"},
      {"fan", "Print the stacky fan"},
      {"groups", "H(beta), ker(beta-bar), their splitting and Gamma"},
      {"charts", "Local charts N(sigma) of every maximal cone"},
      {"isotropy", "Isotropy groups of every admissible zero pattern"},
      {"moment", "Moment map, level value and level-set checks"},
      {"certify", "Full comparison certificate"},
      {"verify", "Re-check a certificate produced by `certify --json`"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Input file or bundled fixture name")->required();
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->add_option("--jobs", jobs, "Worker threads for per-pattern checks")->check(CLI::Range(1, 256));
    sub->add_flag("--fan-complete-assert", assert_complete,
                  "Assert completeness of fans in dimension >= 4 (recorded in the report)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    toristack::Report report;
    if (command == "verify") {
      report = toristack::verify_report(toristack::parse_report(load(input)));
    } else {
      const auto doc = toristack::parse_input(load(input));
      report = toristack::run_command(*toristack::parse_subcommand(command), doc, {jobs, assert_complete});
    }
    std::cout << (as_json ? toristack::render_json(report) : toristack::render_text(report));
    return toristack::exit_code(report);
  } catch (const toristack::InvalidInput& e) {
    std::cerr << "toristack: " << e.what() << "\n";
    return kInputError;
  } catch (const toristack::Error& e) {
    std::cerr << "toristack: " << e.what() << "\n";
    return kInputError;
  }
}
