#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corecc/cli.hpp"

namespace {

int emit(const corecc::cli::CommandResult& result) {
  if (!result.err.empty()) std::cerr << result.err;
  if (!result.out.empty()) std::cout << result.out;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corecc: lazy streams, corecursion schemes and multi-shot delimited control"};
  app.require_subcommand(1);

  std::string stream_text;
  std::string algo = "corec";
  std::optional<std::size_t> take_n;
  std::vector<std::size_t> observe;
  bool ipp_json = false;
  auto* ipp = app.add_subcommand("ipp", "Search a Boolean stream for an endlessly repeating value");
  ipp->add_option("--stream", stream_text, "Stream spec <prefix>:<cycle> over {T,F}, e.g. TFFTF:T")
      ->required();
  ipp->add_option("--algo", algo, "Search algorithm")
      ->check(CLI::IsMember({"corec", "coiter"}));
  ipp->add_option("--take", take_n, "Number of indices to observe");
  ipp->add_option("--observe", observe, "Comma-separated observation sizes against one search")
      ->delimiter(',');
  ipp->add_flag("--json", ipp_json, "Emit JSON instead of the list rendering");

  bool laws_json = false;
  auto* laws = app.add_subcommand("laws", "Run the delimited-control law suite");
  laws->add_flag("--json", laws_json, "Emit JSON instead of one line per law");

  std::size_t choice_n = 0;
  bool choice_backtracking = false;
  bool choice_json = false;
  auto* choice = app.add_subcommand("choice", "Countable choice demo over the squares relation");
  choice->add_option("--n", choice_n, "How many choice values to produce")->required();
  choice->add_flag("--backtracking", choice_backtracking,
                   "Providers find their witnesses through control effects");
  choice->add_flag("--json", choice_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ipp->parsed()) {
    std::string parse_error;
    const auto spec = corecc::StreamSpec::parse(stream_text, &parse_error);
    if (!spec) {
      std::cerr << "error: bad --stream value: " << parse_error << "\n";
      return 2;
    }
    if (take_n && !observe.empty()) {
      std::cerr << "error: pass either --take or --observe, not both\n";
      return 2;
    }
    std::vector<std::size_t> observations = observe;
    if (take_n) observations.push_back(*take_n);
    if (observations.empty()) {
      std::cerr << "error: nothing to observe; pass --take or --observe\n";
      return 2;
    }
    return emit(corecc::cli::cmd_ipp({*spec, algo == "coiter", observations, ipp_json}));
  }
  if (laws->parsed()) return emit(corecc::cli::cmd_laws(laws_json));
  if (choice->parsed()) {
    return emit(corecc::cli::cmd_choice(choice_n, choice_backtracking, choice_json));
  }
  return 2;
}
