#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "corecc/cli.hpp"

using corecc::LawReport;
using corecc::StreamSpec;
namespace cli = corecc::cli;

namespace {

StreamSpec spec_of(const char* text) {
  auto spec = StreamSpec::parse(text);
  REQUIRE(spec.has_value());
  return *spec;
}

}  // namespace

TEST_CASE("stream spec parsing") {
  const auto spec = spec_of("TFFTF:T");
  CHECK(spec.prefix == std::vector<bool>{true, false, false, true, false});
  CHECK(spec.cycle == std::vector<bool>{true});
  CHECK(spec.eventually_constant());
  CHECK(spec.to_string() == "TFFTF:T");

  CHECK(spec_of(":T").prefix.empty());
  CHECK_FALSE(spec_of("T:TF").eventually_constant());

  std::string error;
  CHECK_FALSE(StreamSpec::parse("TFT", &error).has_value());
  CHECK(error.find(':') != std::string::npos);
  CHECK_FALSE(StreamSpec::parse("TF:", &error).has_value());
  CHECK_FALSE(StreamSpec::parse("TX:T", &error).has_value());
  CHECK_FALSE(StreamSpec::parse("T:T:T", &error).has_value());
}

TEST_CASE("stream spec denotes prefix then repeated cycle") {
  const auto spec = spec_of("TF:FT");
  CHECK(corecc::take(spec.to_stream(), 8) ==
        std::vector<bool>{true, false, false, true, false, true, false, true});
}

TEST_CASE("index list rendering") {
  CHECK(cli::format_index_list({}) == "[]");
  CHECK(cli::format_index_list({1, 2, 4}) == "[1; 2; 4]");
  CHECK(cli::format_index_lists({{0, 3, 5}, {0, 3, 5, 6, 7}}) ==
        "[[0; 3; 5]; [0; 3; 5; 6; 7]]");
}

TEST_CASE("cmd_ipp reproduces the published renderings byte for byte") {
  const auto take3 = cli::cmd_ipp({spec_of("TFFTF:T"), false, {3}, false});
  CHECK(take3.exit_code == 0);
  CHECK(take3.out == "[1; 2; 4]\n");

  const auto take5 = cli::cmd_ipp({spec_of("TFFTF:T"), false, {5}, false});
  CHECK(take5.exit_code == 0);
  CHECK(take5.out == "[0; 3; 5; 6; 7]\n");

  const auto pair = cli::cmd_ipp({spec_of("TFFTF:T"), false, {3, 5}, false});
  CHECK(pair.exit_code == 0);
  CHECK(pair.out == "[[0; 3; 5]; [0; 3; 5; 6; 7]]\n");

  const auto coiter4 = cli::cmd_ipp({spec_of("FTFT:T"), true, {4}, false});
  CHECK(coiter4.exit_code == 0);
  CHECK(coiter4.out == "[3; 4; 5; 6]\n");
}

TEST_CASE("cmd_ipp json agrees with the text rendering element-wise") {
  const auto text = cli::cmd_ipp({spec_of("TFFTF:T"), false, {3}, false});
  const auto json = cli::cmd_ipp({spec_of("TFFTF:T"), false, {3}, true});
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed == nlohmann::json({1, 2, 4}));
  CHECK(text.out == cli::format_index_list(parsed.get<std::vector<corecc::Index>>()) + "\n");

  const auto pair = cli::cmd_ipp({spec_of("TFFTF:T"), false, {3, 5}, true});
  CHECK(nlohmann::json::parse(pair.out) == nlohmann::json({{0, 3, 5}, {0, 3, 5, 6, 7}}));
}

TEST_CASE("cmd_ipp warns on non-constant cycles") {
  const auto result = cli::cmd_ipp({spec_of("T:TF"), false, {4}, false});
  CHECK(result.err.find("warning") != std::string::npos);
  CHECK(result.exit_code == 0);
}

TEST_CASE("cmd_ipp with nothing to observe is a usage error") {
  CHECK(cli::cmd_ipp({spec_of("T:T"), false, {}, false}).exit_code == 2);
}

TEST_CASE("cmd_laws reports one line per law and exit code zero") {
  const auto result = cli::cmd_laws(false);
  CHECK(result.exit_code == 0);
  std::size_t lines = 0;
  for (char c : result.out) lines += c == '\n';
  CHECK(lines == corecc::run_control_laws().size());
  CHECK(result.out.find("FAIL") == std::string::npos);

  const auto json = cli::cmd_laws(true);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.size() == corecc::run_control_laws().size());
  for (const auto& entry : parsed) {
    CHECK(entry["pass"] == true);
    CHECK(entry["fixtures"].get<int>() >= 5);
  }
}

TEST_CASE("a failing law renders FAIL and a nonzero exit") {
  LawReport broken{"beta", 5, 4, {"double: got 7, want 8"}};
  LawReport fine{"context-discard", 5, 5, {}};
  const std::string text = cli::detail::format_law_reports({broken, fine}, false);
  CHECK(text.find("beta: FAIL (4/5 fixtures)") != std::string::npos);
  CHECK_FALSE(cli::detail::all_laws_pass({broken, fine}));
  CHECK(cli::detail::all_laws_pass({fine}));
}

TEST_CASE("cmd_choice prints the squares and the relation verdict") {
  const auto five = cli::cmd_choice(5, false, false);
  CHECK(five.exit_code == 0);
  CHECK(five.out == "[0; 1; 4; 9; 16]\nrelation: OK\n");

  const auto none = cli::cmd_choice(0, false, false);
  CHECK(none.exit_code == 0);
  CHECK(none.out == "[]\nrelation: OK\n");

  const auto backtracked = cli::cmd_choice(6, true, false);
  CHECK(backtracked.exit_code == 0);
  CHECK(backtracked.out == "[0; 1; 4; 9; 16; 25]\nrelation: OK\n");

  const auto json = cli::cmd_choice(3, true, true);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["values"] == nlohmann::json({0, 1, 4}));
  CHECK(parsed["relation"] == "OK");
}
