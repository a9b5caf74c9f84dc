// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 verification failures found.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nakayama/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitVerifyFailed = 2;

void print_json(const nakayama::reports::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected Nakayama algebras: admissible sequences, resolution quivers,"
               " homological dimensions, left-retraction chains, theorem verification"};
  app.require_subcommand(1);

  std::string seq_text;
  int n_max = 6;
  int c_max = 12;
  bool dot = false;
  bool json_flag = false;  // JSON is the default; flag kept for scripting symmetry

  CLI::App* analyze = app.add_subcommand("analyze", "kind, f table, components, cycles");
  analyze->add_option("sequence", seq_text, "admissible sequence, e.g. 3,3,3,4")->required();

  CLI::App* quiver = app.add_subcommand("quiver", "resolution quiver as JSON or DOT");
  quiver->add_option("sequence", seq_text, "admissible sequence")->required();
  quiver->add_flag("--dot", dot, "emit DOT text instead of JSON");
  quiver->add_flag("--json", json_flag, "emit JSON (default)");

  CLI::App* dims = app.add_subcommand("dims", "projective/injective dimensions of the simples");
  dims->add_option("sequence", seq_text, "admissible sequence")->required();

  CLI::App* retract = app.add_subcommand("retract", "left-retraction chain to a self-injective"
                                                    " sequence, with cycle summary");
  retract->add_option("sequence", seq_text, "admissible sequence (cycle kind)")->required();

  CLI::App* verify = app.add_subcommand("verify", "run every theorem check over all admissible"
                                                  " sequences within bounds");
  verify->add_option("--n-max", n_max, "max number of simples")->check(CLI::PositiveNumber);
  verify->add_option("--c-max", c_max, "max entry value")->check(CLI::PositiveNumber);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible sequences within"
                                                        " bounds, one per line");
  enumerate->add_option("--n-max", n_max, "max number of simples")->check(CLI::PositiveNumber);
  enumerate->add_option("--c-max", c_max, "max entry value")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (analyze->parsed()) {
      print_json(nakayama::reports::analyze_report(nakayama::AdmissibleSequence::parse(seq_text)));
    } else if (quiver->parsed()) {
      const auto seq = nakayama::AdmissibleSequence::parse(seq_text);
      if (dot)
        std::cout << nakayama::reports::quiver_dot(seq);
      else
        print_json(nakayama::reports::quiver_report(seq));
    } else if (dims->parsed()) {
      print_json(nakayama::reports::dims_report(nakayama::AdmissibleSequence::parse(seq_text)));
    } else if (retract->parsed()) {
      print_json(nakayama::reports::retract_report(nakayama::AdmissibleSequence::parse(seq_text)));
    } else if (verify->parsed()) {
      const nakayama::VerificationReport report = nakayama::run_suite(n_max, c_max);
      print_json(nakayama::reports::verification_report_json(report));
      std::cerr << nakayama::reports::verification_summary(report);
      return report.ok() ? kExitOk : kExitVerifyFailed;
    } else if (enumerate->parsed()) {
      nakayama::enumerate_admissible(n_max, c_max, [](const nakayama::AdmissibleSequence& a) {
        std::cout << a.render() << '\n';
      });
    }
  } catch (const nakayama::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}
