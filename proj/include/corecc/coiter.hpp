#pragma once

#include <type_traits>
#include <utility>

#include "corecc/control.hpp"
#include "corecc/eff_stream.hpp"
#include "corecc/stream.hpp"

namespace corecc {

/// Coiteration (anamorphism): unfolds a stream from a seed. Element i is
/// base(next^i(seed)); the step function runs once per forced tail and the
/// loop never ends.
template <typename BaseF, typename NextF, typename X>
auto coiter(BaseF base, NextF next, X seed)
    -> Stream<std::decay_t<std::invoke_result_t<BaseF, X>>> {
  using Y = std::decay_t<std::invoke_result_t<BaseF, X>>;
  return Stream<Y>(base(seed),
                   [base, next, seed] { return coiter(base, next, next(seed)); });
}

/// Coiteration with an effectful step: the seed update is a computation, so
/// forcing a tail may perform control effects.
template <typename R, typename BaseF, typename NextF, typename X>
auto coiter_eff(BaseF base, NextF next, X seed)
    -> EffStream<R, std::decay_t<std::invoke_result_t<BaseF, X>>> {
  using Y = std::decay_t<std::invoke_result_t<BaseF, X>>;
  return EffStream<R, Y>(base(seed), [base, next, seed] {
    return bind(next(seed), [base, next](X updated) {
      return pure<R>(coiter_eff<R>(base, next, std::move(updated)));
    });
  });
}

/// Element-wise map, as an instance of coiteration over the source stream.
template <typename F, typename A>
auto maps(F fn, Stream<A> source) -> Stream<std::decay_t<std::invoke_result_t<F, A>>> {
  return coiter([fn](const Stream<A>& s) { return fn(s.head()); },
                [](const Stream<A>& s) { return s.tail(); }, std::move(source));
}

}  // namespace corecc
