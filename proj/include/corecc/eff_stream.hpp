#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "corecc/control.hpp"
#include "corecc/stream.hpp"

namespace corecc {

/// Stream whose tail suspension yields a control computation: forcing the
/// tail may capture or resume continuations. Tails are never memoized;
/// forcing the same tail again re-runs its effects.
template <typename R, typename A>
class EffStream {
 public:
  using Suspension = std::function<Ctl<R, EffStream<R, A>>()>;

  EffStream(A head, Suspension tail)
      : cell_(std::make_shared<const Cell>(std::move(head), std::move(tail))) {}

  const A& head() const { return cell_->head; }

  Ctl<R, EffStream> tail() const { return cell_->make_tail(); }

 private:
  struct Cell {
    Cell(A h, Suspension t) : head(std::move(h)), make_tail(std::move(t)) {}
    A head;
    Suspension make_tail;
  };

  std::shared_ptr<const Cell> cell_;
};

/// An effect-free stream viewed as an effectful one.
template <typename R, typename A>
EffStream<R, A> lift(Stream<A> source) {
  return EffStream<R, A>(source.head(),
                         [source] { return pure<R>(lift<R, A>(source.tail())); });
}

namespace detail {

template <typename R, typename A>
Ctl<R, std::vector<A>> take_eff_from(EffStream<R, A> s, std::size_t want, std::vector<A> acc) {
  acc.push_back(s.head());
  if (acc.size() == want) return pure<R>(std::move(acc));
  return bind(s.tail(),
              [want, acc](EffStream<R, A> rest) { return take_eff_from<R, A>(rest, want, acc); });
}

}  // namespace detail

/// Effectful take: as take, sequencing tail forcing through the engine, so
/// forcing may backtrack into earlier context. Same n=1 rule: exactly
/// max(n-1, 0) tail suspensions are invoked.
template <typename R, typename A>
Ctl<R, std::vector<A>> take_eff(EffStream<R, A> s, std::size_t n) {
  if (n == 0) return pure<R>(std::vector<A>{});
  return delay([s, n] { return detail::take_eff_from<R, A>(s, n, {}); });
}

/// take_eff over a not-yet-produced stream. With n=0 the stream itself is
/// never demanded, so none of its effects run.
template <typename R, typename A>
Ctl<R, std::vector<A>> take_eff(Ctl<R, EffStream<R, A>> pending, std::size_t n) {
  if (n == 0) return pure<R>(std::vector<A>{});
  return bind(std::move(pending), [n](EffStream<R, A> s) { return take_eff(s, n); });
}

}  // namespace corecc
