#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "corecc/choice.hpp"
#include "corecc/ipp.hpp"
#include "corecc/laws.hpp"
#include "corecc/stream_spec.hpp"

namespace corecc::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::string format_index_list(const std::vector<Index>& indices) {
  std::string out = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i != 0) out += "; ";
    out += std::to_string(indices[i]);
  }
  out += "]";
  return out;
}

inline std::string format_index_lists(const std::vector<std::vector<Index>>& lists) {
  std::string out = "[";
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (i != 0) out += "; ";
    out += format_index_list(lists[i]);
  }
  out += "]";
  return out;
}

struct IppRequest {
  StreamSpec spec;
  bool use_coiter = false;
  std::vector<std::size_t> observations;
  bool json = false;
};

namespace detail {

template <typename R>
Ctl<R, std::vector<std::vector<Index>>> observe_each(
    IppStream<R> indices, std::shared_ptr<const std::vector<std::size_t>> plan, std::size_t at,
    std::vector<std::vector<Index>> acc) {
  if (at == plan->size()) return pure<R>(std::move(acc));
  return bind(take_eff(indices, (*plan)[at]),
              [indices, plan, at, acc](const std::vector<Index>& got) {
                auto extended = acc;
                extended.push_back(got);
                return observe_each<R>(indices, plan, at + 1, std::move(extended));
              });
}

}  // namespace detail

/// Runs one of the two index-search programs on the given stream and prints
/// the requested observation(s). Exit code 0 only when every printed list
/// passes check_ipp.
inline CommandResult cmd_ipp(const IppRequest& request) {
  CommandResult result;
  if (request.observations.empty()) {
    result.err = "error: nothing to observe; pass --take or --observe\n";
    result.exit_code = 2;
    return result;
  }
  if (!request.spec.eventually_constant()) {
    result.err +=
        "warning: cycle is not constant; termination of each observation depends on the "
        "requested budget being satisfiable\n";
  }
  const Stream<bool> input = request.spec.to_stream();
  bool all_ok = true;
  if (request.observations.size() == 1) {
    using Answer = std::vector<Index>;
    const std::size_t n = request.observations.front();
    auto program =
        request.use_coiter ? infinite_bool_coiter<Answer>(input) : infinite_bool<Answer>(input);
    const Answer indices = run(bind(std::move(program), [n](IppStream<Answer> stream) {
      return take_eff(stream, n);
    }));
    const CheckReport report = check_ipp(input, indices, n);
    all_ok = report.all_pass();
    if (!all_ok) result.err += "invariant failure: " + report.failure + "\n";
    result.out = (request.json ? nlohmann::json(indices).dump() : format_index_list(indices)) + "\n";
  } else {
    using Answer = std::vector<std::vector<Index>>;
    auto plan = std::make_shared<const std::vector<std::size_t>>(request.observations);
    auto program =
        request.use_coiter ? infinite_bool_coiter<Answer>(input) : infinite_bool<Answer>(input);
    const Answer lists = run(bind(std::move(program), [plan](IppStream<Answer> stream) {
      return detail::observe_each<Answer>(stream, plan, 0, {});
    }));
    for (std::size_t i = 0; i < lists.size(); ++i) {
      const CheckReport report = check_ipp(input, lists[i], request.observations[i]);
      if (!report.all_pass()) {
        all_ok = false;
        result.err += "invariant failure: " + report.failure + "\n";
      }
    }
    result.out = (request.json ? nlohmann::json(lists).dump() : format_index_lists(lists)) + "\n";
  }
  result.exit_code = all_ok ? 0 : 1;
  return result;
}

namespace detail {

inline std::string format_law_reports(const std::vector<LawReport>& reports, bool as_json) {
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& report : reports) {
      arr.push_back({{"law", report.law},
                     {"fixtures", report.fixtures},
                     {"passed", report.passed},
                     {"pass", report.pass()}});
    }
    return arr.dump() + "\n";
  }
  std::string out;
  for (const auto& report : reports) {
    out += report.law + ": " + (report.pass() ? "PASS" : "FAIL") + " (" +
           std::to_string(report.passed) + "/" + std::to_string(report.fixtures) + " fixtures)\n";
    for (const auto& failure : report.failures) out += "  " + failure + "\n";
  }
  return out;
}

inline bool all_laws_pass(const std::vector<LawReport>& reports) {
  for (const auto& report : reports) {
    if (!report.pass()) return false;
  }
  return !reports.empty();
}

}  // namespace detail

/// Runs the delimited-control law suite; one line per law.
inline CommandResult cmd_laws(bool as_json) {
  const std::vector<LawReport> reports = run_control_laws();
  CommandResult result;
  result.out = detail::format_law_reports(reports, as_json);
  result.exit_code = detail::all_laws_pass(reports) ? 0 : 1;
  return result;
}

namespace detail {

template <typename R>
Ctl<R, std::uint64_t> search_from(Cont<R, std::uint64_t> found, std::uint64_t index,
                                  std::uint64_t candidate) {
  if (candidate == index * index) return throw_to<std::uint64_t>(found, candidate);
  return delay([found, index, candidate] { return search_from<R>(found, index, candidate + 1); });
}

// Scans candidates upward and escapes through a checkpoint when the witness
// shows up, instead of computing it directly.
template <typename R>
Ctl<R, std::uint64_t> searching_square_provider(std::uint64_t index) {
  return callcc<R, std::uint64_t>(
      [index](Cont<R, std::uint64_t> found) { return search_from<R>(found, index, 0); });
}

}  // namespace detail

/// Demonstrates countable choice with the squares relation. With
/// backtracking=true the providers locate their witnesses through control
/// effects rather than computing them directly.
inline CommandResult cmd_choice(std::size_t count, bool backtracking, bool as_json) {
  using Answer = std::vector<std::uint64_t>;
  ChoiceSpec<Answer, std::uint64_t> spec{
      [](std::uint64_t n, const std::uint64_t& x) { return x == n * n; },
      backtracking
          ? maps([](std::uint64_t n) { return detail::searching_square_provider<Answer>(n); },
                 count_up(0))
          : maps([](std::uint64_t n) { return pure<Answer>(n * n); }, count_up(0))};
  const auto relation = spec.relation;
  const Answer values = run(ac_nat(std::move(spec), count));
  bool ok = values.size() == count;
  for (std::size_t i = 0; ok && i < values.size(); ++i) {
    ok = relation(static_cast<std::uint64_t>(i), values[i]);
  }
  CommandResult result;
  if (as_json) {
    result.out = nlohmann::json{{"values", values}, {"relation", ok ? "OK" : "FAIL"}}.dump() + "\n";
  } else {
    result.out = format_index_list(values) + "\nrelation: " + (ok ? "OK" : "FAIL") + "\n";
  }
  result.exit_code = ok ? 0 : 1;
  return result;
}

}  // namespace corecc::cli
