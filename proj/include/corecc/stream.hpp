#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace corecc {

/// Pure lazy stream: strict head, suspended tail. The tail suspension is
/// forced at most once; the result is memoized, which is observationally
/// invisible for pure streams and safe to share across threads.
template <typename A>
class Stream {
 public:
  using Suspension = std::function<Stream<A>()>;

  Stream(A head, Suspension tail)
      : cell_(std::make_shared<const Cell>(std::move(head), std::move(tail))) {}

  const A& head() const { return cell_->head; }

  Stream tail() const {
    const Cell& cell = *cell_;
    std::call_once(cell.once, [&cell] { cell.memo.emplace(cell.make_tail()); });
    return *cell.memo;
  }

 private:
  struct Cell {
    Cell(A h, Suspension t) : head(std::move(h)), make_tail(std::move(t)) {}

    // Unlink the memoized chain iteratively so that dropping a long stream
    // never recurses cell by cell.
    ~Cell() {
      if (!memo) return;
      std::shared_ptr<const Cell> current = std::move(memo->cell_);
      memo.reset();
      while (current && current.use_count() == 1) {
        std::shared_ptr<const Cell> next;
        if (current->memo) {
          next = std::move(current->memo->cell_);
          current->memo.reset();
        }
        current = std::move(next);
      }
    }

    A head;
    Suspension make_tail;
    mutable std::once_flag once;
    mutable std::optional<Stream<A>> memo;
  };

  std::shared_ptr<const Cell> cell_;
};

template <typename A>
Stream<std::decay_t<A>> cons(A head, typename Stream<std::decay_t<A>>::Suspension tail) {
  return Stream<std::decay_t<A>>(std::move(head), std::move(tail));
}

template <typename A>
Stream<A> always(A value) {
  return Stream<A>(value, [value] { return always(value); });
}

template <typename F, typename A>
Stream<A> repeat_fn(F fn, A value) {
  return Stream<A>(value, [fn, value] { return repeat_fn(fn, fn(value)); });
}

inline Stream<std::uint64_t> count_up(std::uint64_t from) {
  return Stream<std::uint64_t>(from, [from] { return count_up(from + 1); });
}

inline Stream<std::uint64_t> zeroes() { return always<std::uint64_t>(0); }

inline Stream<std::uint64_t> count_down(std::uint64_t from) {
  return Stream<std::uint64_t>(from,
                               [from] { return from == 0 ? zeroes() : count_down(from - 1); });
}

namespace detail {

template <typename A>
Stream<A> append_from(std::shared_ptr<const std::vector<A>> items, std::size_t index,
                      Stream<A> rest) {
  if (index == items->size()) return rest;
  return Stream<A>((*items)[index],
                   [items, index, rest] { return append_from(items, index + 1, rest); });
}

}  // namespace detail

/// A finite prefix in front of an infinite stream.
template <typename A>
Stream<A> append(std::vector<A> prefix, Stream<A> rest) {
  if (prefix.empty()) return rest;
  return detail::append_from(std::make_shared<const std::vector<A>>(std::move(prefix)), 0,
                             std::move(rest));
}

/// First n elements. Forces exactly max(n-1, 0) tail suspensions: the last
/// element's tail is never touched.
template <typename A>
std::vector<A> take(Stream<A> s, std::size_t n) {
  std::vector<A> out;
  if (n == 0) return out;
  out.reserve(n);
  out.push_back(s.head());
  for (std::size_t i = 1; i < n; ++i) {
    s = s.tail();
    out.push_back(s.head());
  }
  return out;
}

/// Element at position index (forces index tails).
template <typename A>
A stream_at(Stream<A> s, std::size_t index) {
  for (std::size_t i = 0; i < index; ++i) s = s.tail();
  return s.head();
}

}  // namespace corecc
