#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "corecc/coiter.hpp"
#include "corecc/control.hpp"
#include "corecc/eff_stream.hpp"
#include "corecc/stream.hpp"

namespace corecc {

/// A provider is a delimited computation that can deliver a value, possibly
/// using control effects (backtracking, multi-shot resumption) along the way.
template <typename R, typename B>
using Provider = Ctl<R, B>;

namespace detail {

template <typename R, typename B>
struct DistributeState {
  B value;
  Stream<Ctl<R, B>> pending;
  Cont<R, EffStream<R, B>> deliver;
};

}  // namespace detail

/// Distributes a stream of delimited computations into a delimited stream of
/// values: element n of the result is whatever provider n delivers, and
/// provider n runs no earlier than the forcing that reveals element n.
///
/// Built from coiteration and callcc alone: the checkpoint capturing the
/// consumer of the whole stream is threaded through the loop state, and each
/// step sequences exactly one pending provider.
template <typename R, typename B>
Ctl<R, EffStream<R, B>> dns_shift(Stream<Ctl<R, B>> providers) {
  using State = detail::DistributeState<R, B>;
  return callcc<R, EffStream<R, B>>([providers](Cont<R, EffStream<R, B>> deliver) {
    return bind(providers.head(), [providers, deliver](B first) {
      return pure<R>(coiter_eff<R>(
          [](const State& st) { return st.value; },
          [](State st) -> Ctl<R, State> {
            return bind(st.pending.head(), [st](B delivered) {
              return pure<R>(State{std::move(delivered), st.pending.tail(), st.deliver});
            });
          },
          State{std::move(first), providers.tail(), deliver}));
    });
  });
}

/// A countable choice problem: a decidable relation over (index, value) pairs
/// and one provider per index, each eventually delivering a satisfying value.
template <typename R, typename A>
struct ChoiceSpec {
  std::function<bool(std::uint64_t, const A&)> relation;
  Stream<Ctl<R, A>> providers;
};

/// First count values of the choice stream; position i of the result is
/// provider i's delivery. With count = 0 no provider runs at all.
template <typename R, typename A>
Ctl<R, std::vector<A>> ac_nat(ChoiceSpec<R, A> spec, std::size_t count) {
  return take_eff(dns_shift(std::move(spec.providers)), count);
}

}  // namespace corecc
