#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace monomatch {

// Hardware parallelism, overridable with the MONOMATCH_THREADS environment
// variable. Never less than 1.
std::size_t default_thread_count();

// Bounded worker pool. The calling thread takes part in every parallel_for,
// so an Executor of n threads owns n - 1 workers and nested calls from
// inside a body cannot deadlock.
class Executor {
 public:
  explicit Executor(std::size_t threads = default_thread_count());
  ~Executor();

  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  std::size_t thread_count() const noexcept { return workers_.size() + 1; }

  // Runs body(k) for every k in [0, n) and returns once all calls have
  // finished. Indices are handed out in ascending contiguous blocks. If any
  // call throws, the exception of the lowest failing index is rethrown after
  // every block has settled.
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

 private:
  void worker_loop(std::stop_token stop);

  std::mutex mutex_;
  std::condition_variable_any ready_;
  std::deque<std::function<void()>> queue_;
  std::vector<std::jthread> workers_;
};

// Process-wide pool sized by default_thread_count().
Executor& default_executor();

// Order-preserving parallel map: result[k] == f(xs[k]) for every k.
// f must be pure; scheduling never affects the result.
template <class T, class F>
auto pmap(F&& f, std::span<const T> xs, Executor& executor = default_executor())
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<std::optional<R>> slots(xs.size());
  executor.parallel_for(xs.size(), [&](std::size_t k) { slots[k].emplace(f(xs[k])); });
  std::vector<R> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

template <class T, class F>
auto pmap(F&& f, const std::vector<T>& xs, Executor& executor = default_executor()) {
  return pmap<T>(std::forward<F>(f), std::span<const T>(xs), executor);
}

}  // namespace monomatch
