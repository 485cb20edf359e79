#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace corecc {

/// Raised when a captured continuation is invoked outside the run() that
/// captured it, or after that run() already delivered its answer.
class ControlError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <typename R, typename A>
class Ctl;
template <typename R, typename A>
class Cont;

namespace detail {

// One token per run(); continuations remember the token of the run that
// captured them so misuse fails loudly instead of corrupting the engine.
struct RunToken {
  bool alive = true;
};

inline thread_local std::vector<std::shared_ptr<RunToken>> run_stack;

inline const std::shared_ptr<RunToken>& current_run_token() {
  if (run_stack.empty()) throw ControlError("control effect evaluated outside run()");
  return run_stack.back();
}

inline void require_current_run(const std::shared_ptr<RunToken>& token) {
  if (!token || !token->alive)
    throw ControlError("continuation invoked after its run() completed");
  if (run_stack.empty() || run_stack.back() != token)
    throw ControlError(
        "continuation invoked under a different run() than the one that captured it");
}

struct RunGuard {
  explicit RunGuard(std::shared_ptr<RunToken> token) { run_stack.push_back(std::move(token)); }
  ~RunGuard() {
    run_stack.back()->alive = false;
    run_stack.pop_back();
  }
  RunGuard(const RunGuard&) = delete;
  RunGuard& operator=(const RunGuard&) = delete;
};

// Common spine node for computation and continuation chains. Long chains
// (deeply nested binds, long pending continuations) are torn down by walking
// steal_child iteratively, keeping destruction depth flat.
struct ChainNode {
  virtual ~ChainNode() = default;
  virtual std::shared_ptr<const ChainNode> steal_child() const noexcept { return nullptr; }
};

inline void dismantle(std::shared_ptr<const ChainNode> node) noexcept {
  while (node && node.use_count() == 1) {
    std::shared_ptr<const ChainNode> child = node->steal_child();
    node.reset();
    node = std::move(child);
  }
}

template <typename Node>
void release_spine(std::shared_ptr<const Node>& node) noexcept {
  if (node && node.use_count() == 1) {
    dismantle(std::shared_ptr<const ChainNode>(std::move(node)));
  }
  node.reset();
}

// A single trampolined engine step: either the final answer or more work.
template <typename R>
class Step {
 public:
  using Thunk = std::function<Step<R>()>;

  static Step done(R value) { return Step(Payload(std::in_place_index<0>, std::move(value))); }
  static Step more(Thunk thunk) { return Step(Payload(std::in_place_index<1>, std::move(thunk))); }

  bool finished() const { return payload_.index() == 0; }
  R take_value() { return std::get<0>(std::move(payload_)); }
  Thunk take_thunk() { return std::get<1>(std::move(payload_)); }

 private:
  using Payload = std::variant<R, Thunk>;
  explicit Step(Payload payload) : payload_(std::move(payload)) {}
  Payload payload_;
};

template <typename R>
R drive(Step<R> step) {
  while (!step.finished()) step = step.take_thunk()();
  return step.take_value();
}

template <typename R, typename A>
struct KNode : ChainNode {
  virtual Step<R> invoke(A value) const = 0;
};

// The rest of a computation: consumes an A and eventually answers R.
// Immutable and shared; invoking it never consumes it.
template <typename R, typename A>
class KChain {
 public:
  KChain(std::shared_ptr<const KNode<R, A>> node, bool at_delimiter)
      : node_(std::move(node)), at_delimiter_(at_delimiter) {}

  KChain(const KChain&) = default;
  KChain(KChain&&) noexcept = default;
  KChain& operator=(KChain other) noexcept {
    std::swap(node_, other.node_);
    std::swap(at_delimiter_, other.at_delimiter_);
    return *this;
  }
  ~KChain() { release_spine(node_); }

  // True only for the chain that is exactly the enclosing run()'s delimiter;
  // resuming into it may splice instead of starting a sub-run.
  bool at_delimiter() const { return at_delimiter_; }

  Step<R> invoke(A value) const {
    return Step<R>::more([node = node_, value = std::move(value)]() mutable {
      return node->invoke(std::move(value));
    });
  }

  std::shared_ptr<const ChainNode> release_node() noexcept {
    at_delimiter_ = false;
    return std::shared_ptr<const ChainNode>(std::move(node_));
  }

 private:
  std::shared_ptr<const KNode<R, A>> node_;
  bool at_delimiter_ = false;
};

template <typename R>
struct EndK final : KNode<R, R> {
  Step<R> invoke(R value) const override { return Step<R>::done(std::move(value)); }
};

template <typename R>
KChain<R, R> delimiter_chain() {
  return KChain<R, R>(std::make_shared<const EndK<R>>(), true);
}

template <typename R, typename A, typename B, typename F>
struct BindK final : KNode<R, A> {
  BindK(F fn_, KChain<R, B> next_) : fn(std::move(fn_)), next(std::move(next_)) {}
  F fn;
  mutable KChain<R, B> next;

  Step<R> invoke(A value) const override { return fn(std::move(value)).step(next); }
  std::shared_ptr<const ChainNode> steal_child() const noexcept override {
    return next.release_node();
  }
};

template <typename R, typename A, typename B, typename F>
struct PremapK final : KNode<R, B> {
  PremapK(F fn_, KChain<R, A> inner_) : fn(std::move(fn_)), inner(std::move(inner_)) {}
  F fn;
  mutable KChain<R, A> inner;

  Step<R> invoke(B value) const override { return inner.invoke(fn(std::move(value))); }
  std::shared_ptr<const ChainNode> steal_child() const noexcept override {
    return inner.release_node();
  }
};

template <typename R, typename A>
struct CtlNode : ChainNode {
  virtual Step<R> start(KChain<R, A> k) const = 0;
};

struct CtlAccess;

template <typename T>
struct IsCtl : std::false_type {};
template <typename R, typename A>
struct IsCtl<Ctl<R, A>> : std::true_type {};

}  // namespace detail

/// A control-effectful computation producing A, delimited by a run() whose
/// answer type is R. Values are immutable descriptions; constructing one
/// performs no effects and nothing executes until run().
template <typename R, typename A>
class Ctl {
 public:
  using answer_type = R;
  using value_type = A;

  explicit Ctl(std::shared_ptr<const detail::CtlNode<R, A>> node) : node_(std::move(node)) {}

  Ctl(const Ctl&) = default;
  Ctl(Ctl&&) noexcept = default;
  Ctl& operator=(Ctl other) noexcept {
    std::swap(node_, other.node_);
    return *this;
  }
  ~Ctl() { detail::release_spine(node_); }

  // Schedules this computation against continuation k as one engine step.
  detail::Step<R> step(detail::KChain<R, A> k) const {
    return detail::Step<R>::more([node = node_, k = std::move(k)]() mutable {
      return node->start(std::move(k));
    });
  }

 private:
  std::shared_ptr<const detail::CtlNode<R, A>> node_;
  friend struct detail::CtlAccess;
};

/// A captured continuation. Immutable and multi-shot: it can be stored and
/// invoked any number of times, and invoking it never mutates it.
///
/// operator() re-enters the captured context composably and produces that
/// context's final answer; throw_to abandons the current context instead.
template <typename R, typename A>
class Cont {
 public:
  Ctl<R, R> operator()(std::type_identity_t<A> value) const;

  /// Views this continuation as one accepting B, converting on entry.
  template <typename B, typename F>
  Cont<R, B> premap(F convert) const;

 private:
  Cont(detail::KChain<R, A> chain, std::shared_ptr<detail::RunToken> token)
      : chain_(std::move(chain)), token_(std::move(token)) {}

  detail::KChain<R, A> chain_;
  std::shared_ptr<detail::RunToken> token_;

  template <typename, typename>
  friend class Cont;
  friend struct detail::CtlAccess;
};

namespace detail {

struct CtlAccess {
  template <typename R, typename A>
  static std::shared_ptr<const ChainNode> steal_node(Ctl<R, A>& m) noexcept {
    return std::shared_ptr<const ChainNode>(std::move(m.node_));
  }
  template <typename R, typename A>
  static Cont<R, A> make_cont(KChain<R, A> chain, std::shared_ptr<RunToken> token) {
    return Cont<R, A>(std::move(chain), std::move(token));
  }
  template <typename R, typename A>
  static const KChain<R, A>& chain(const Cont<R, A>& k) {
    return k.chain_;
  }
  template <typename R, typename A>
  static const std::shared_ptr<RunToken>& token(const Cont<R, A>& k) {
    return k.token_;
  }
};

template <typename R, typename A>
struct PureNode final : CtlNode<R, A> {
  explicit PureNode(A v) : value(std::move(v)) {}
  A value;

  Step<R> start(KChain<R, A> k) const override { return k.invoke(value); }
};

template <typename R, typename A, typename B, typename F>
struct BindNode final : CtlNode<R, B> {
  BindNode(Ctl<R, A> source_, F fn_) : source(std::move(source_)), fn(std::move(fn_)) {}
  mutable Ctl<R, A> source;
  F fn;

  Step<R> start(KChain<R, B> k) const override {
    auto linked = std::make_shared<const BindK<R, A, B, F>>(fn, std::move(k));
    return source.step(KChain<R, A>(std::move(linked), false));
  }
  std::shared_ptr<const ChainNode> steal_child() const noexcept override {
    return CtlAccess::steal_node(source);
  }
};

template <typename R, typename A, typename F>
struct DelayNode final : CtlNode<R, A> {
  explicit DelayNode(F make_) : make(std::move(make_)) {}
  F make;

  Step<R> start(KChain<R, A> k) const override { return make().step(std::move(k)); }
};

template <typename R, typename B>
struct AbortNode final : CtlNode<R, B> {
  explicit AbortNode(R v) : value(std::move(v)) {}
  R value;

  Step<R> start(KChain<R, B>) const override { return Step<R>::done(value); }
};

template <typename R, typename A, typename F>
struct ShiftNode final : CtlNode<R, A> {
  explicit ShiftNode(F body_) : body(std::move(body_)) {}
  F body;

  Step<R> start(KChain<R, A> k) const override {
    Cont<R, A> captured = CtlAccess::make_cont(std::move(k), current_run_token());
    return body(std::move(captured)).step(delimiter_chain<R>());
  }
};

template <typename R, typename A, typename B>
struct ThrowNode final : CtlNode<R, B> {
  ThrowNode(Cont<R, A> target_, A value_) : target(std::move(target_)), value(std::move(value_)) {}
  Cont<R, A> target;
  A value;

  Step<R> start(KChain<R, B>) const override {
    require_current_run(CtlAccess::token(target));
    return CtlAccess::chain(target).invoke(value);
  }
};

template <typename R, typename A>
struct ResumeNode final : CtlNode<R, R> {
  ResumeNode(Cont<R, A> target_, A value_) : target(std::move(target_)), value(std::move(value_)) {}
  Cont<R, A> target;
  A value;

  Step<R> start(KChain<R, R> k) const override {
    require_current_run(CtlAccess::token(target));
    if (k.at_delimiter()) return CtlAccess::chain(target).invoke(value);
    // The resumption's answer feeds further work: evaluate the captured
    // context to its delimiter in a nested loop, then continue with k.
    return Step<R>::more([target = target, value = value, k = std::move(k)]() mutable {
      return k.invoke(drive(CtlAccess::chain(target).invoke(std::move(value))));
    });
  }
};

}  // namespace detail

template <typename R, typename A>
Ctl<R, std::decay_t<A>> pure(A value) {
  using V = std::decay_t<A>;
  return Ctl<R, V>(std::make_shared<const detail::PureNode<R, V>>(std::move(value)));
}

/// Left-to-right sequencing: effects of source happen before fn runs.
/// fn must be const-invocable; a captured continuation may re-run it.
template <typename R, typename A, typename F>
auto bind(Ctl<R, A> source, F fn) -> std::invoke_result_t<F, A> {
  using Out = std::invoke_result_t<F, A>;
  static_assert(detail::IsCtl<Out>::value, "bind expects fn to return a Ctl");
  static_assert(std::is_same_v<typename Out::answer_type, R>, "bind cannot change the answer type");
  using B = typename Out::value_type;
  return Out(std::make_shared<const detail::BindNode<R, A, B, F>>(std::move(source), std::move(fn)));
}

/// Suspends construction of a computation until the engine reaches it.
template <typename F>
auto delay(F make) -> std::invoke_result_t<F> {
  using Out = std::invoke_result_t<F>;
  static_assert(detail::IsCtl<Out>::value, "delay expects make to return a Ctl");
  using R = typename Out::answer_type;
  using A = typename Out::value_type;
  return Out(std::make_shared<const detail::DelayNode<R, A, F>>(std::move(make)));
}

/// The delimiter. Fully evaluates the computation on a trampoline, so
/// evaluation depth stays bounded no matter how many binds it chains.
template <typename R>
R run(Ctl<R, R> program) {
  auto token = std::make_shared<detail::RunToken>();
  detail::RunGuard guard(token);
  return detail::drive(program.step(detail::delimiter_chain<R>()));
}

/// Captures the continuation up to the enclosing run() as a composable Cont
/// and evaluates body(k) in its place. k may be invoked zero or more times.
template <typename R, typename A, typename F>
Ctl<R, A> shift(F body) {
  return Ctl<R, A>(std::make_shared<const detail::ShiftNode<R, A, F>>(std::move(body)));
}

/// Discards the current context; the enclosing run() answers value.
template <typename B, typename R>
Ctl<R, B> abort(R value) {
  return Ctl<R, B>(std::make_shared<const detail::AbortNode<R, B>>(std::move(value)));
}

/// Abandons the current context and re-enters target with value. It never
/// returns to the surrounding expression, so the value type B is free.
template <typename B, typename R, typename A>
Ctl<R, B> throw_to(Cont<R, A> target, std::type_identity_t<A> value) {
  return Ctl<R, B>(
      std::make_shared<const detail::ThrowNode<R, A, B>>(std::move(target), std::move(value)));
}

/// callcc, defined in terms of shift: body receives the current context as an
/// abortive continuation; if body(k) returns normally its value resumes that
/// context, and throwing to k re-enters it (possibly many times).
template <typename R, typename A, typename F>
Ctl<R, A> callcc(F body) {
  return shift<R, A>([body = std::move(body)](Cont<R, A> k) -> Ctl<R, R> {
    return bind(body(k), [k](A value) -> Ctl<R, R> { return k(value); });
  });
}

template <typename R, typename A>
Ctl<R, R> Cont<R, A>::operator()(std::type_identity_t<A> value) const {
  return Ctl<R, R>(std::make_shared<const detail::ResumeNode<R, A>>(*this, std::move(value)));
}

template <typename R, typename A>
template <typename B, typename F>
Cont<R, B> Cont<R, A>::premap(F convert) const {
  auto node = std::make_shared<const detail::PremapK<R, A, B, F>>(std::move(convert), chain_);
  return Cont<R, B>(detail::KChain<R, B>(std::move(node), false), token_);
}

}  // namespace corecc
