#include <doctest.h>

#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "corecc/control.hpp"

using corecc::abort;
using corecc::bind;
using corecc::callcc;
using corecc::Cont;
using corecc::ControlError;
using corecc::Ctl;
using corecc::pure;
using corecc::run;
using corecc::shift;
using corecc::throw_to;

TEST_CASE("run evaluates pure values") {
  CHECK(run(pure<int>(42)) == 42);
  CHECK(run(pure<std::vector<int>>(std::vector<int>{})).empty());
}

TEST_CASE("bind sequences left to right") {
  CHECK(run(bind(pure<int>(1), [](int x) { return pure<int>(x + 1); })) == 2);
  CHECK(run(bind(pure<int>(3), [](int x) { return pure<int>(x * 2); })) == 6);
  const auto inc = [](int x) { return pure<int>(x + 1); };
  CHECK(run(bind(bind(pure<int>(1), inc), inc)) == 3);
}

TEST_CASE("nested runs are ordinary values") {
  CHECK(run(pure<int>(run(pure<int>(5)))) == 5);
}

TEST_CASE("running the same program twice gives the same answer") {
  auto program = bind(shift<int, int>([](Cont<int, int> k) { return k(9); }),
                      [](int x) { return pure<int>(x + 1); });
  CHECK(run(program) == 10);
  CHECK(run(program) == 10);
}

TEST_CASE("abort discards the rest of the computation") {
  CHECK(run(bind(abort<int>(7), [](int) { return pure<int>(0); })) == 7);
  CHECK(run(abort<int>(11)) == 11);
  CHECK(run(bind(pure<int>(1), [](int) { return abort<int>(2); })) == 2);
}

TEST_CASE("shift resumed once in tail position is the identity") {
  CHECK(run(bind(shift<int, int>([](Cont<int, int> k) { return k(9); }),
                 [](int x) { return pure<int>(x); })) == 9);
}

TEST_CASE("shift with unused continuation discards its context") {
  CHECK(run(bind(shift<int, int>([](Cont<int, int>) { return pure<int>(100); }),
                 [](int x) { return pure<int>(x + 1); })) == 100);
}

TEST_CASE("shift continuation composes when resumed twice in sequence") {
  // k is x -> x + 1 up to the delimiter; k(k(0)) = 2.
  CHECK(run(bind(shift<int, int>([](Cont<int, int> k) {
                   return bind(k(0), [k](int r) { return k(r); });
                 }),
                 [](int x) { return pure<int>(x + 1); })) == 2);
}

TEST_CASE("abort inside a composable resumption answers that resumption") {
  // k re-enters x -> abort(x * 10); the abort ends the resumed context, so
  // k(5) produces 50 and the shift body continues with it.
  CHECK(run(bind(shift<int, int>([](Cont<int, int> k) {
                   return bind(k(5), [](int r) { return pure<int>(r + 1); });
                 }),
                 [](int x) { return abort<int>(x * 10); })) == 51);
}

TEST_CASE("callcc with unused continuation returns its body's value") {
  CHECK(run(bind(callcc<int, int>([](Cont<int, int>) { return pure<int>(5); }),
                 [](int x) { return pure<int>(x + 1); })) == 6);
}

TEST_CASE("throw abandons the context containing it") {
  CHECK(run(bind(callcc<int, int>([](Cont<int, int> k) {
                   return bind(throw_to<int>(k, 3), [](int) { return pure<int>(999); });
                 }),
                 [](int x) { return pure<int>(x + 1); })) == 4);
}

TEST_CASE("a stored continuation can be thrown to from distinct dynamic points") {
  std::optional<Cont<int, int>> stored;
  std::vector<int> log;
  const int got = run(bind(callcc<int, int>([&stored](Cont<int, int> k) {
                             stored = k;
                             return pure<int>(1);
                           }),
                           [&stored, &log](int x) -> Ctl<int, int> {
                             log.push_back(x);
                             if (x == 1) return throw_to<int>(*stored, 2);
                             if (x == 2) return throw_to<int>(*stored, 3);
                             return pure<int>(x * 10);
                           }));
  CHECK(got == 30);
  CHECK(log == std::vector<int>{1, 2, 3});
}

TEST_CASE("bind is associative over effectful programs") {
  using Program = Ctl<int, int>;
  const std::vector<Program> sources = {
      pure<int>(1),
      abort<int>(7),
      shift<int, int>([](Cont<int, int> k) { return k(4); }),
      shift<int, int>([](Cont<int, int> k) { return bind(k(1), [k](int r) { return k(r); }); }),
      callcc<int, int>([](Cont<int, int> k) {
        return bind(throw_to<int>(k, 5), [](int) { return pure<int>(0); });
      }),
  };
  const auto f = [](int x) { return pure<int>(x + 10); };
  const auto g = [](int x) { return pure<int>(x * 3); };
  for (const Program& m : sources) {
    const int left = run(bind(bind(m, f), g));
    const int right = run(bind(m, [f, g](int x) { return bind(f(x), g); }));
    CHECK(left == right);
  }
}

TEST_CASE("long bind chains run and tear down without deep recursion") {
  const int n = 100000;
  Ctl<int, int> chain = pure<int>(0);
  for (int i = 0; i < n; ++i) {
    chain = bind(std::move(chain), [](int x) { return pure<int>(x + 1); });
  }
  CHECK(run(chain) == n);
}

TEST_CASE("throwing to a continuation after its run completed is an error") {
  std::optional<Cont<int, int>> stored;
  CHECK(run(bind(callcc<int, int>([&stored](Cont<int, int> k) {
                   stored = k;
                   return pure<int>(1);
                 }),
                 [](int x) { return pure<int>(x); })) == 1);
  CHECK(stored.has_value());
  CHECK_THROWS_AS(run(throw_to<int>(*stored, 5)), ControlError);
}

TEST_CASE("throwing to a continuation captured by an enclosing run is an error") {
  std::optional<Cont<int, int>> stored;
  const auto program = bind(
      callcc<int, int>([&stored](Cont<int, int> k) {
        stored = k;
        return pure<int>(1);
      }),
      [&stored](int x) -> Ctl<int, int> {
        if (x == 1) {
          // The inner run has its own delimiter; the outer continuation
          // must be rejected there.
          CHECK_THROWS_AS(run(throw_to<int>(*stored, 2)), ControlError);
        }
        return pure<int>(x);
      });
  CHECK(run(program) == 1);
}

TEST_CASE("independent runs may execute on separate threads") {
  auto worker = [](int seed) {
    return run(bind(shift<int, int>([seed](Cont<int, int> k) {
                      return bind(k(seed), [k](int r) { return k(r); });
                    }),
                    [](int x) { return pure<int>(x + 1); }));
  };
  int a = 0;
  int b = 0;
  std::thread ta([&] { a = worker(0); });
  std::thread tb([&] { b = worker(10); });
  ta.join();
  tb.join();
  CHECK(a == 2);
  CHECK(b == 12);
}
