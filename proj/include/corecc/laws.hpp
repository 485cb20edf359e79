#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corecc/control.hpp"

namespace corecc {

struct LawReport {
  std::string law;
  std::size_t fixtures = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool pass() const { return fixtures > 0 && passed == fixtures; }
};

namespace detail {

inline void record(LawReport& report, const std::string& fixture, bool ok,
                   const std::string& mismatch) {
  ++report.fixtures;
  if (ok) {
    ++report.passed;
  } else {
    report.failures.push_back(fixture + ": " + mismatch);
  }
}

inline void record_eq(LawReport& report, const std::string& fixture, int got, int want) {
  record(report, fixture, got == want,
         "got " + std::to_string(got) + ", want " + std::to_string(want));
}

using IntTail = std::function<Ctl<int, int>(int)>;

inline const std::vector<std::pair<const char*, IntTail>>& law_tails() {
  static const std::vector<std::pair<const char*, IntTail>> tails = {
      {"increment", [](int x) { return pure<int>(x + 1); }},
      {"double", [](int x) { return pure<int>(x * 2); }},
      {"chained", [](int x) { return bind(pure<int>(x), [](int y) { return pure<int>(y - 3); }); }},
      {"identity", [](int x) { return pure<int>(x); }},
      {"mixed", [](int x) { return pure<int>(x % 7 + x); }},
  };
  return tails;
}

}  // namespace detail

/// Resuming the captured context exactly once, in tail position, is the same
/// as never having shifted at all.
inline LawReport law_beta() {
  LawReport report{"beta", 0, 0, {}};
  const int values[] = {0, 5, 42, -17, 999};
  std::size_t i = 0;
  for (const auto& [name, tail] : detail::law_tails()) {
    const int value = values[i++];
    const int got = run(bind(
        shift<int, int>([value](Cont<int, int> k) { return k(value); }), tail));
    const int want = run(bind(pure<int>(value), tail));
    detail::record_eq(report, name, got, want);
  }
  return report;
}

/// A shift body that ignores its continuation discards the pending context.
inline LawReport law_context_discard() {
  LawReport report{"context-discard", 0, 0, {}};
  using Body = std::function<Ctl<int, int>()>;
  const std::vector<std::pair<const char*, Body>> bodies = {
      {"constant", [] { return pure<int>(7); }},
      {"bound", [] { return bind(pure<int>(1), [](int x) { return pure<int>(x + 1); }); }},
      {"aborting", [] { return abort<int>(9); }},
      {"abort-after-bind",
       [] { return bind(pure<int>(3), [](int x) { return abort<int>(x * 10); }); }},
      {"nested-shift",
       [] { return shift<int, int>([](Cont<int, int> k) { return k(13); }); }},
  };
  std::size_t i = 0;
  for (const auto& [name, body] : bodies) {
    const auto& tail = detail::law_tails()[i++ % detail::law_tails().size()].second;
    const int got = run(bind(shift<int, int>([body](Cont<int, int>) { return body(); }), tail));
    const int want = run(body());
    detail::record_eq(report, name, got, want);
  }
  return report;
}

/// callcc whose continuation never escapes behaves like its body alone.
inline LawReport law_callcc_unused() {
  LawReport report{"callcc-unused", 0, 0, {}};
  const int values[] = {0, 1, -8, 64, 12345};
  std::size_t i = 0;
  for (const auto& [name, tail] : detail::law_tails()) {
    const int value = values[i++];
    const int got = run(bind(
        callcc<int, int>([value](Cont<int, int>) { return pure<int>(value); }), tail));
    const int want = run(bind(pure<int>(value), tail));
    detail::record_eq(report, name, got, want);
  }
  return report;
}

/// Resuming a captured continuation several times with distinct values acts
/// like running the captured context independently for each value.
inline LawReport law_multi_shot() {
  LawReport report{"multi-shot", 0, 0, {}};

  {
    const auto plain = [](int x) { return x + 1; };
    const int got = run(bind(
        shift<int, int>([](Cont<int, int> k) {
          return bind(k(10), [k](int a) {
            return bind(k(20), [a](int b) { return pure<int>(a + b); });
          });
        }),
        [plain](int x) { return pure<int>(plain(x)); }));
    detail::record_eq(report, "double-resume-sum", got, plain(10) + plain(20));
  }

  {
    using Answer = std::vector<int>;
    const auto context = [](int x) { return Answer{x, x * x}; };
    const Answer got = run(bind(
        shift<Answer, int>([](Cont<Answer, int> k) {
          return bind(k(2), [k](Answer first) {
            return bind(k(5), [first](Answer second) {
              Answer all = first;
              all.insert(all.end(), second.begin(), second.end());
              return pure<Answer>(all);
            });
          });
        }),
        [context](int x) { return pure<Answer>(context(x)); }));
    Answer want = context(2);
    const Answer more = context(5);
    want.insert(want.end(), more.begin(), more.end());
    detail::record(report, "double-resume-collect", got == want, "collected lists differ");
  }

  {
    const auto plain = [](int x) { return x * 3; };
    const int got = run(bind(
        shift<int, int>([](Cont<int, int> k) {
          return bind(k(1), [k](int a) {
            return bind(k(2), [k, a](int b) {
              return bind(k(3), [a, b](int c) { return pure<int>(a + b + c); });
            });
          });
        }),
        [plain](int x) { return pure<int>(plain(x)); }));
    detail::record_eq(report, "triple-resume", got, plain(1) + plain(2) + plain(3));
  }

  {
    // Throws to the same stored continuation from two distinct dynamic
    // points; every re-entry appends to the log. The cell outlives the run
    // and is captured by reference so the continuation never owns it.
    std::optional<Cont<int, int>> stored;
    std::vector<int> log;
    const int got = run(bind(
        callcc<int, int>([&stored](Cont<int, int> k) {
          stored = k;
          return pure<int>(1);
        }),
        [&stored, &log](int x) -> Ctl<int, int> {
          log.push_back(x);
          if (x == 1) return throw_to<int>(*stored, 2);
          if (x == 2) return throw_to<int>(*stored, 3);
          return pure<int>(x * 10);
        }));
    const bool ok = got == 30 && log == std::vector<int>{1, 2, 3};
    detail::record(report, "stored-cont-two-sites", ok, "got " + std::to_string(got));
  }

  {
    const int got = run(bind(
        shift<int, int>([](Cont<int, int> k) {
          return bind(k(4), [k](int a) {
            return bind(k(4), [a](int b) { return pure<int>(a == b ? 1 : 0); });
          });
        }),
        [](int x) { return pure<int>(x * 3 - 1); }));
    detail::record_eq(report, "same-value-twice", got, 1);
  }

  return report;
}

/// callcc programs agree with their hand-written shift/abort encodings.
inline LawReport law_callcc_from_shift() {
  LawReport report{"callcc-from-shift", 0, 0, {}};

  // Manual encoding of an escape: re-enter the captured context, then hand
  // its answer straight to the delimiter.
  const auto escape = [](Cont<int, int> k, int value) -> Ctl<int, int> {
    return bind(k(value), [](int r) { return abort<int>(r); });
  };

  {
    const auto tail = [](int x) { return pure<int>(x + 1); };
    const int got = run(bind(callcc<int, int>([](Cont<int, int>) { return pure<int>(5); }), tail));
    const int enc = run(bind(shift<int, int>([](Cont<int, int> k) {
                               return bind(pure<int>(5), [k](int v) { return k(v); });
                             }),
                             tail));
    detail::record_eq(report, "unused-continuation", got, enc);
  }

  {
    const auto tail = [](int x) { return pure<int>(x + 1); };
    const int got = run(bind(callcc<int, int>([](Cont<int, int> k) {
                               return bind(throw_to<int>(k, 3), [](int) { return pure<int>(999); });
                             }),
                             tail));
    const int enc = run(bind(shift<int, int>([escape](Cont<int, int> k) {
                               auto body = bind(escape(k, 3), [](int) { return pure<int>(999); });
                               return bind(body, [k](int v) { return k(v); });
                             }),
                             tail));
    detail::record_eq(report, "immediate-escape", got, enc);
  }

  {
    const auto tail = [](int x) { return pure<int>(x + 1); };
    const auto logic = [](auto escape_with) {
      return bind(pure<int>(10), [escape_with](int y) -> Ctl<int, int> {
        if (y > 5) return escape_with(y * 2);
        return pure<int>(y);
      });
    };
    const int got = run(bind(callcc<int, int>([logic](Cont<int, int> k) {
                               return logic([k](int v) { return throw_to<int>(k, v); });
                             }),
                             tail));
    const int enc = run(bind(shift<int, int>([logic, escape](Cont<int, int> k) {
                               auto body = logic([escape, k](int v) { return escape(k, v); });
                               return bind(body, [k](int v) { return k(v); });
                             }),
                             tail));
    detail::record_eq(report, "escape-after-work", got, enc);
  }

  {
    const auto tail = [](int x) { return pure<int>(x + 1); };
    const int got = run(bind(callcc<int, int>([](Cont<int, int>) {
                               return bind(callcc<int, int>([](Cont<int, int> k2) {
                                             return throw_to<int>(k2, 7);
                                           }),
                                           [](int x) { return pure<int>(x + 100); });
                             }),
                             tail));
    const int enc = run(bind(shift<int, int>([escape](Cont<int, int> k1) {
                               auto inner = shift<int, int>([escape](Cont<int, int> k2) {
                                 return bind(escape(k2, 7), [k2](int v) { return k2(v); });
                               });
                               auto body = bind(inner, [](int x) { return pure<int>(x + 100); });
                               return bind(body, [k1](int v) { return k1(v); });
                             }),
                             tail));
    detail::record_eq(report, "nested-capture", got, enc);
  }

  {
    const auto tail = [](int x) { return pure<int>(x + 2); };
    const int got = run(bind(callcc<int, int>([](Cont<int, int> k1) {
                               return bind(callcc<int, int>([k1](Cont<int, int>) -> Ctl<int, int> {
                                             return throw_to<int>(k1, 50);
                                           }),
                                           [](int x) { return pure<int>(x + 1); });
                             }),
                             tail));
    const int enc = run(bind(shift<int, int>([escape](Cont<int, int> k1) {
                               auto inner = shift<int, int>([escape, k1](Cont<int, int> k2) {
                                 auto body = escape(k1, 50);
                                 return bind(body, [k2](int v) { return k2(v); });
                               });
                               auto body = bind(inner, [](int x) { return pure<int>(x + 1); });
                               return bind(body, [k1](int v) { return k1(v); });
                             }),
                             tail));
    detail::record_eq(report, "cross-capture-escape", got, enc);
  }

  return report;
}

inline std::vector<LawReport> run_control_laws() {
  return {law_beta(), law_context_discard(), law_callcc_unused(), law_multi_shot(),
          law_callcc_from_shift()};
}

}  // namespace corecc
