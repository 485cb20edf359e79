#pragma once

#include <type_traits>
#include <utility>

#include "corecc/control.hpp"
#include "corecc/corec_m.hpp"
#include "corecc/eff_stream.hpp"

namespace corecc {

/// Classical corecursion. The step function receives, along with the current
/// seed, a first-class continuation capturing the caller that requested the
/// tail: throwing a stream to it makes that stream the remainder, while
/// returning a seed keeps the loop going. The continuation is multi-shot, so
/// a paused loop can be stored and resumed later.
///
/// Defined on top of corec_m_eff: each step captures the "deliver the step
/// outcome" continuation with callcc and hands the step function its
/// finished-branch restriction.
template <typename R, typename BaseF, typename NextF, typename X>
auto corec_c(BaseF base, NextF next, X seed)
    -> Ctl<R, EffStream<R, std::decay_t<std::invoke_result_t<BaseF, X>>>> {
  using Y = std::decay_t<std::invoke_result_t<BaseF, X>>;
  using Rest = EffStream<R, Y>;
  using Outcome = StepME<R, Y, X>;
  return pure<R>(corec_m_eff<R>(
      base,
      [next](X state) -> Ctl<R, Outcome> {
        return callcc<R, Outcome>([next, state](Cont<R, Outcome> finish) -> Ctl<R, Outcome> {
          Cont<R, Rest> hand_back = finish.template premap<Rest>(
              [](Rest rest) { return Outcome::finished(std::move(rest)); });
          return bind(next(state, std::move(hand_back)),
                      [](X updated) -> Ctl<R, Outcome> {
                        return pure<R>(Outcome::seed(std::move(updated)));
                      });
        });
      },
      std::move(seed)));
}

}  // namespace corecc
