#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monomatch/byte_text.hpp"
#include "monomatch/error.hpp"
#include "monomatch/executor.hpp"
#include "monomatch/law_report.hpp"

namespace monomatch {

using Rng = std::mt19937_64;

template <class T>
using Generator = std::function<T(Rng&)>;

// Returns strictly smaller candidates for a failing value, best first.
template <class T>
using Shrinker = std::function<std::vector<T>(const T&)>;

// A monoid given as runtime values. `equal` and `show` are only needed for
// law checking; `equal` falls back to operator== when left empty.
template <class T>
struct MonoidOps {
  std::function<T()> identity;
  std::function<T(const T&, const T&)> combine;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> show;

  bool eq(const T& a, const T& b) const {
    if (equal) return equal(a, b);
    if constexpr (std::equality_comparable<T>) {
      return a == b;
    } else {
      throw InvalidArgument("MonoidOps: no equality supplied");
    }
  }

  std::string render(const T& x) const { return show ? show(x) : std::string("<value>"); }
};

// A monoid whose values can be split: combine(take(i, x), drop(i, x)) == x
// for every i <= length(x).
template <class T>
struct ChunkableOps : MonoidOps<T> {
  std::function<std::size_t(const T&)> length;
  std::function<T(std::size_t, const T&)> take;
  std::function<T(std::size_t, const T&)> drop;
};

// A candidate monoid morphism from a chunkable source to a target monoid.
template <class S, class T>
struct MorphismWitness {
  ChunkableOps<S> source;
  MonoidOps<T> target;
  std::function<T(const S&)> map_fn;
};

struct LawCheckConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 0x5eed;
};

// Right fold of combine seeded with identity; the empty list gives identity.
template <class T>
T mconcat(const MonoidOps<T>& ops, std::span<const T> xs) {
  T acc = ops.identity();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = ops.combine(*it, acc);
  return acc;
}

template <class T>
T mconcat(const MonoidOps<T>& ops, const std::vector<T>& xs) {
  return mconcat(ops, std::span<const T>(xs));
}

// Splits x into pieces of length i (the last may be shorter). A value of
// length at most i yields [x]. Throws InvalidArgument if i == 0.
template <class T>
std::vector<T> chunk(const ChunkableOps<T>& ops, std::size_t i, const T& x) {
  if (i == 0) throw InvalidArgument("chunk: size must be positive");
  std::vector<T> pieces;
  T rest = x;
  while (ops.length(rest) > i) {
    pieces.push_back(ops.take(i, rest));
    rest = ops.drop(i, rest);
  }
  pieces.push_back(std::move(rest));
  return pieces;
}

// chunk specialised to the list monoid, returning views instead of copies.
template <class T>
std::vector<std::span<const T>> chunk_list(std::size_t i, std::span<const T> xs) {
  if (i == 0) throw InvalidArgument("chunk: size must be positive");
  std::vector<std::span<const T>> pieces;
  while (xs.size() > i) {
    pieces.push_back(xs.first(i));
    xs = xs.subspan(i);
  }
  pieces.push_back(xs);
  return pieces;
}

namespace detail {

// pmconcat, additionally reporting the number of parallel rounds taken.
template <class T>
T pmconcat_rounds(const MonoidOps<T>& ops, std::ptrdiff_t i, std::span<const T> xs,
                  Executor& executor, std::size_t& rounds) {
  rounds = 0;
  if (i <= 1 || xs.size() <= static_cast<std::size_t>(i)) return mconcat(ops, xs);
  const auto fan_in = static_cast<std::size_t>(i);
  std::vector<T> level;
  std::span<const T> current = xs;
  while (current.size() > fan_in) {
    const auto groups = chunk_list(fan_in, current);
    auto next =
        pmap<std::span<const T>>([&](std::span<const T> group) { return mconcat(ops, group); },
                                 std::span<const std::span<const T>>(groups), executor);
    assert(next.size() < current.size());
    level = std::move(next);
    current = level;
    ++rounds;
  }
  return mconcat(ops, current);
}

}  // namespace detail

// Parallel tree reduction. Each round groups adjacent elements i at a time
// and reduces the groups concurrently; the final step (at most i elements
// left, or i <= 1) is a sequential mconcat. Operands are never reordered, so
// only associativity is required.
template <class T>
T pmconcat(const MonoidOps<T>& ops, std::ptrdiff_t i, std::span<const T> xs,
           Executor& executor = default_executor()) {
  std::size_t rounds = 0;
  return detail::pmconcat_rounds(ops, i, xs, executor, rounds);
}

template <class T>
T pmconcat(const MonoidOps<T>& ops, std::ptrdiff_t i, const std::vector<T>& xs,
           Executor& executor = default_executor()) {
  return pmconcat(ops, i, std::span<const T>(xs), executor);
}

// f x == mconcat (pmap f (chunk i x)), compared with the target's equality.
template <class S, class T>
bool morphism_distribution_check(const MorphismWitness<S, T>& w, const S& x, std::size_t i,
                                 Executor& executor = default_executor()) {
  const auto pieces = chunk(w.source, i, x);
  const auto mapped = pmap(w.map_fn, pieces, executor);
  return w.target.eq(w.map_fn(x), mconcat(w.target, mapped));
}

// f x == pmconcat i (pmap f (chunk j x)).
template <class S, class T>
bool two_level_check(const MorphismWitness<S, T>& w, const S& x, std::ptrdiff_t i, std::size_t j,
                     Executor& executor = default_executor()) {
  const auto pieces = chunk(w.source, j, x);
  const auto mapped = pmap(w.map_fn, pieces, executor);
  return w.target.eq(w.map_fn(x), pmconcat(w.target, i, mapped, executor));
}

// Shrinks by replacing an element with the halves take(n/2) and
// drop(n - n/2), each of length n/2.
template <class T>
Shrinker<T> halving_shrinker(const ChunkableOps<T>& ops) {
  return [ops](const T& x) {
    const std::size_t n = ops.length(x);
    if (n == 0) return std::vector<T>{};
    return std::vector<T>{ops.take(n / 2, x), ops.drop(n - n / 2, x)};
  };
}

namespace detail {

// Greedily replaces arguments with shrink candidates while `fails` still
// holds. Bounded so a buggy shrinker cannot loop forever.
template <class T, class Fails>
std::vector<T> shrink_case(std::vector<T> args, const Shrinker<T>& shrink, Fails fails) {
  if (!shrink) return args;
  for (int round = 0; round < 256; ++round) {
    bool improved = false;
    for (std::size_t k = 0; k < args.size() && !improved; ++k) {
      for (auto& candidate : shrink(args[k])) {
        auto trial = args;
        trial[k] = candidate;
        if (fails(trial)) {
          args = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return args;
}

template <class T, class Render>
std::string render_case(const std::vector<T>& args, Render render) {
  std::string out = "(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ", ";
    out += render(args[k]);
  }
  return out + ")";
}

// Runs one law over `trials` generated cases of `arity` arguments, stopping
// at the first failure.
template <class T, class Holds, class Render>
LawResult run_law(std::string name, std::size_t arity, const Generator<T>& gen,
                  const Shrinker<T>& shrink, std::size_t trials, Rng& rng, Holds holds,
                  Render render) {
  LawResult result{std::move(name), 0, true, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<T> args;
    args.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k) args.push_back(gen(rng));
    ++result.trials;
    if (!holds(args)) {
      result.passed = false;
      auto minimal =
          shrink_case(std::move(args), shrink, [&](const std::vector<T>& a) { return !holds(a); });
      result.counterexample = render_case(minimal, render);
      break;
    }
  }
  return result;
}

}  // namespace detail

// Left identity, right identity and associativity over random cases.
template <class T>
LawReport check_monoid_laws(const MonoidOps<T>& ops, const Generator<T>& gen,
                            const LawCheckConfig& config, const Shrinker<T>& shrink = {}) {
  if (config.trials == 0) throw InvalidArgument("check_monoid_laws: trials must be positive");
  Rng rng(config.seed);
  const auto render = [&](const T& x) { return ops.render(x); };
  LawReport report;
  report.laws.push_back(detail::run_law<T>(
      "left_identity", 1, gen, shrink, config.trials, rng,
      [&](const std::vector<T>& a) { return ops.eq(ops.combine(ops.identity(), a[0]), a[0]); },
      render));
  report.laws.push_back(detail::run_law<T>(
      "right_identity", 1, gen, shrink, config.trials, rng,
      [&](const std::vector<T>& a) { return ops.eq(ops.combine(a[0], ops.identity()), a[0]); },
      render));
  report.laws.push_back(detail::run_law<T>(
      "associativity", 3, gen, shrink, config.trials, rng,
      [&](const std::vector<T>& a) {
        return ops.eq(ops.combine(ops.combine(a[0], a[1]), a[2]),
                      ops.combine(a[0], ops.combine(a[1], a[2])));
      },
      render));
  return report;
}

// Identity preservation (a single case) and distribution over combine.
template <class S, class T>
LawReport check_morphism(const MorphismWitness<S, T>& w, const Generator<S>& gen,
                         const LawCheckConfig& config, const Shrinker<S>& shrink = {}) {
  if (config.trials == 0) throw InvalidArgument("check_morphism: trials must be positive");
  Rng rng(config.seed);
  LawReport report;

  LawResult identity{"preserves_identity", 1, true, std::nullopt};
  const T mapped_identity = w.map_fn(w.source.identity());
  if (!w.target.eq(mapped_identity, w.target.identity())) {
    identity.passed = false;
    identity.counterexample = "f(" + w.source.render(w.source.identity()) +
                              ") = " + w.target.render(mapped_identity) + ", expected " +
                              w.target.render(w.target.identity());
  }
  report.laws.push_back(std::move(identity));

  report.laws.push_back(detail::run_law<S>(
      "distributes", 2, gen, shrink, config.trials, rng,
      [&](const std::vector<S>& a) {
        return w.target.eq(w.map_fn(w.source.combine(a[0], a[1])),
                           w.target.combine(w.map_fn(a[0]), w.map_fn(a[1])));
      },
      [&](const S& x) { return w.source.render(x); }));
  return report;
}

// The list monoid over std::vector<T>: concatenation with [] as identity.
template <class T>
ChunkableOps<std::vector<T>> list_ops() {
  using L = std::vector<T>;
  ChunkableOps<L> ops;
  ops.identity = [] { return L{}; };
  ops.combine = [](const L& a, const L& b) {
    L out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  ops.length = [](const L& x) { return x.size(); };
  ops.take = [](std::size_t i, const L& x) {
    if (i > x.size()) throw PreconditionViolation("take: index exceeds length");
    return L(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
  };
  ops.drop = [](std::size_t i, const L& x) {
    if (i > x.size()) throw PreconditionViolation("drop: index exceeds length");
    return L(x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  };
  return ops;
}

// ByteText under concatenation, with structural byte equality.
ChunkableOps<ByteText> byte_text_ops();

// Random ByteText of length [0, max_len] over the first `alphabet` byte
// values starting at 'a' (alphabet 256 covers every byte).
ByteText random_byte_text(Rng& rng, std::size_t max_len, unsigned alphabet);
ByteText random_byte_text_exact(Rng& rng, std::size_t len, unsigned alphabet);

// Default generator: lengths 0-256, alphabet drawn from {2, 4, 256} per case.
Generator<ByteText> byte_text_generator(std::size_t max_len = 256);

}  // namespace monomatch
