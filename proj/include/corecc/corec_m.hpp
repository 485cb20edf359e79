#pragma once

#include <type_traits>
#include <utility>
#include <variant>

#include "corecc/control.hpp"
#include "corecc/eff_stream.hpp"
#include "corecc/stream.hpp"

namespace corecc {

/// Step outcome of minimal corecursion: either the finished remainder stream
/// or a new seed to keep unfolding from.
template <typename Y, typename X>
class StepM {
 public:
  static StepM finished(Stream<Y> rest) { return StepM(Payload(std::in_place_index<0>, std::move(rest))); }
  static StepM seed(X next) { return StepM(Payload(std::in_place_index<1>, std::move(next))); }

  bool is_finished() const { return payload_.index() == 0; }
  const Stream<Y>& rest() const { return std::get<0>(payload_); }
  const X& next_seed() const { return std::get<1>(payload_); }

 private:
  using Payload = std::variant<Stream<Y>, X>;
  explicit StepM(Payload payload) : payload_(std::move(payload)) {}
  Payload payload_;
};

template <typename R, typename Y, typename X>
class StepME {
 public:
  static StepME finished(EffStream<R, Y> rest) {
    return StepME(Payload(std::in_place_index<0>, std::move(rest)));
  }
  static StepME seed(X next) { return StepME(Payload(std::in_place_index<1>, std::move(next))); }

  bool is_finished() const { return payload_.index() == 0; }
  const EffStream<R, Y>& rest() const { return std::get<0>(payload_); }
  const X& next_seed() const { return std::get<1>(payload_); }

 private:
  using Payload = std::variant<EffStream<R, Y>, X>;
  explicit StepME(Payload payload) : payload_(std::move(payload)) {}
  Payload payload_;
};

/// Minimal corecursion (apomorphism). While the step yields a seed this
/// behaves like plain unfolding; once it yields a finished remainder, that
/// stream is the rest of the output and the step function is done for good.
template <typename BaseF, typename NextF, typename X>
auto corec_m(BaseF base, NextF next, X seed)
    -> Stream<std::decay_t<std::invoke_result_t<BaseF, X>>> {
  using Y = std::decay_t<std::invoke_result_t<BaseF, X>>;
  static_assert(std::is_same_v<std::invoke_result_t<NextF, X>, StepM<Y, X>>,
                "corec_m expects next to return StepM<Y, X>");
  return Stream<Y>(base(seed), [base, next, seed] {
    StepM<Y, X> outcome = next(seed);
    return outcome.is_finished() ? outcome.rest() : corec_m(base, next, outcome.next_seed());
  });
}

/// Minimal corecursion with an effectful step.
template <typename R, typename BaseF, typename NextF, typename X>
auto corec_m_eff(BaseF base, NextF next, X seed)
    -> EffStream<R, std::decay_t<std::invoke_result_t<BaseF, X>>> {
  using Y = std::decay_t<std::invoke_result_t<BaseF, X>>;
  return EffStream<R, Y>(base(seed), [base, next, seed] {
    return bind(next(seed), [base, next](StepME<R, Y, X> outcome) -> Ctl<R, EffStream<R, Y>> {
      if (outcome.is_finished()) return pure<R>(outcome.rest());
      return pure<R>(corec_m_eff<R>(base, next, outcome.next_seed()));
    });
  });
}

}  // namespace corecc
