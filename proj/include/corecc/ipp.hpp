#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "corecc/coiter.hpp"
#include "corecc/control.hpp"
#include "corecc/corec_c.hpp"
#include "corecc/eff_stream.hpp"
#include "corecc/stream.hpp"

namespace corecc {

using Index = std::uint64_t;

/// Stream of indices into a Boolean input stream, all meant to point at one
/// and the same Boolean. The invariant is checked after the fact by
/// check_ipp, not enforced by construction.
template <typename R>
using IppStream = EffStream<R, Index>;

namespace detail {

template <typename R>
struct IppOuterState {
  Index depth;
  Stream<bool> rest;
  Cont<R, IppStream<R>> switch_to;
};

struct IppInnerState {
  Index depth;
  Stream<bool> rest;
};

}  // namespace detail

/// Searches a Boolean stream for endlessly repeating values and produces the
/// stream of their indices. Observers drive the search: demanding more
/// elements may backtrack and re-answer earlier requests, so all observations
/// made under a single run() stay mutually consistent.
///
/// The search guesses that the value at index 0 repeats forever, checkpoints
/// the observer with callcc, and walks the input emitting indices. On a
/// mismatch it pauses the walk and switches the observer over to a classical
/// corecursor hunting the opposite value; each side hands the other a
/// continuation to switch back through when its value reappears.
template <typename R>
Ctl<R, IppStream<R>> infinite_bool(Stream<bool> input) {
  using Outer = detail::IppOuterState<R>;
  using Inner = detail::IppInnerState;
  const bool guess = input.head();
  return callcc<R, IppStream<R>>([input, guess](Cont<R, IppStream<R>> start) {
    return pure<R>(coiter_eff<R>(
        [](const Outer& st) { return st.depth; },
        [guess](Outer st) -> Ctl<R, Outer> {
          if (st.rest.head() == guess)
            return pure<R>(Outer{st.depth + 1, st.rest.tail(), st.switch_to});
          return callcc<R, Outer>([guess, st](Cont<R, Outer> resume_outer) {
            auto flipped = corec_c<R>(
                [](const Inner& in) { return in.depth; },
                [guess, resume_outer](Inner in, Cont<R, IppStream<R>> hand_back) -> Ctl<R, Inner> {
                  if (in.rest.head() == guess)
                    return throw_to<Inner>(resume_outer,
                                           Outer{in.depth + 1, in.rest.tail(), hand_back});
                  return pure<R>(Inner{in.depth + 1, in.rest.tail()});
                },
                Inner{st.depth + 1, st.rest.tail()});
            return bind(std::move(flipped), [st](IppStream<R> indices) {
              return throw_to<Outer>(st.switch_to, std::move(indices));
            });
          });
        },
        Outer{0, input.tail(), start}));
  });
}

/// Same search built from coiteration alone. The mismatch path throws a fresh
/// scan of the opposite value all the way back to the initial checkpoint
/// instead of pausing and resuming, so occurrences of the first guess that
/// precede a long run of the opposite value end up skipped.
template <typename R>
Ctl<R, IppStream<R>> infinite_bool_coiter(Stream<bool> input) {
  using Scan = detail::IppInnerState;
  const bool guess = input.head();
  return callcc<R, IppStream<R>>([input, guess](Cont<R, IppStream<R>> start) {
    return pure<R>(coiter_eff<R>(
        [](const Scan& st) { return st.depth; },
        [guess, start](Scan st) -> Ctl<R, Scan> {
          if (st.rest.head() == guess)
            return pure<R>(Scan{st.depth + 1, st.rest.tail()});
          return callcc<R, Scan>([guess, start, st](Cont<R, Scan> resume_outer) {
            auto flipped = coiter_eff<R>(
                [](const Scan& in) { return in.depth; },
                [guess, resume_outer](Scan in) -> Ctl<R, Scan> {
                  if (in.rest.head() == guess)
                    return throw_to<Scan>(resume_outer, Scan{in.depth + 1, in.rest.tail()});
                  return pure<R>(Scan{in.depth + 1, in.rest.tail()});
                },
                Scan{st.depth + 1, st.rest.tail()});
            return throw_to<Scan>(start, std::move(flipped));
          });
        },
        Scan{0, input.tail()}));
  });
}

struct CheckReport {
  bool strictly_increasing = true;
  bool constant = true;
  bool length_matches = true;
  std::string failure;

  bool all_pass() const { return strictly_increasing && constant && length_matches; }
};

/// Checks an answer against its input: indices strictly increase, they all
/// point at the same Boolean, and the list is as long as requested.
inline CheckReport check_ipp(Stream<bool> input, const std::vector<Index>& indices,
                             std::size_t requested) {
  CheckReport report;
  if (indices.size() != requested) {
    report.length_matches = false;
    report.failure = "expected " + std::to_string(requested) + " indices, got " +
                     std::to_string(indices.size());
    return report;
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] >= indices[i]) {
      report.strictly_increasing = false;
      report.failure = "indices not strictly increasing at position " + std::to_string(i);
      return report;
    }
  }
  if (indices.empty()) return report;
  std::vector<bool> seen;
  seen.reserve(static_cast<std::size_t>(indices.back()) + 1);
  Stream<bool> walk = input;
  for (Index i = 0; i <= indices.back(); ++i) {
    seen.push_back(walk.head());
    if (i != indices.back()) walk = walk.tail();
  }
  const bool target = seen[static_cast<std::size_t>(indices.front())];
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (seen[static_cast<std::size_t>(indices[i])] != target) {
      report.constant = false;
      report.failure = "index " + std::to_string(indices[i]) + " points at a different Boolean";
      return report;
    }
  }
  return report;
}

}  // namespace corecc
