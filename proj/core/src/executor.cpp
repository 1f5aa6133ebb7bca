#include "monomatch/executor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <string>

namespace monomatch {

namespace {

// Shared state of one parallel_for call. Helpers posted to the queue keep it
// alive with a shared_ptr, since a helper may start after the caller has
// already drained every block itself.
struct Job {
  std::size_t n = 0;
  std::size_t block_count = 0;
  const std::function<void(std::size_t)>* body = nullptr;
  std::atomic<std::size_t> next_block{0};
  std::vector<std::exception_ptr> errors;  // one slot per block

  std::mutex mutex;
  std::condition_variable done;
  std::size_t finished = 0;

  std::size_t block_begin(std::size_t b) const { return n * b / block_count; }

  // Claims and runs blocks until none are left.
  void drain() {
    for (;;) {
      const std::size_t b = next_block.fetch_add(1, std::memory_order_relaxed);
      if (b >= block_count) return;
      const std::size_t end = block_begin(b + 1);
      try {
        for (std::size_t k = block_begin(b); k < end; ++k) (*body)(k);
      } catch (...) {
        errors[b] = std::current_exception();
      }
      std::lock_guard lock(mutex);
      if (++finished == block_count) done.notify_all();
    }
  }
};

}  // namespace

std::size_t default_thread_count() {
  if (const char* env = std::getenv("MONOMATCH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

Executor::Executor(std::size_t threads) {
  threads = std::max<std::size_t>(threads, 1);
  workers_.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) {
    workers_.emplace_back([this](std::stop_token stop) { worker_loop(stop); });
  }
}

Executor::~Executor() {
  for (auto& w : workers_) w.request_stop();
  ready_.notify_all();
  workers_.clear();
}

void Executor::worker_loop(std::stop_token stop) {
  for (;;) {
    std::function<void()> task;
    {
      std::unique_lock lock(mutex_);
      if (!ready_.wait(lock, stop, [this] { return !queue_.empty(); })) return;
      task = std::move(queue_.front());
      queue_.pop_front();
    }
    task();
  }
}

void Executor::parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  if (workers_.empty() || n == 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }

  auto job = std::make_shared<Job>();
  job->n = n;
  job->block_count = std::min(n, thread_count() * 4);
  job->body = &body;
  job->errors.resize(job->block_count);

  const std::size_t helpers = std::min(workers_.size(), job->block_count - 1);
  {
    std::lock_guard lock(mutex_);
    for (std::size_t h = 0; h < helpers; ++h) queue_.emplace_back([job] { job->drain(); });
  }
  ready_.notify_all();

  job->drain();
  {
    std::unique_lock lock(job->mutex);
    job->done.wait(lock, [&] { return job->finished == job->block_count; });
  }
  for (auto& error : job->errors) {
    if (error) std::rethrow_exception(error);
  }
}

Executor& default_executor() {
  static Executor executor;
  return executor;
}

}  // namespace monomatch
