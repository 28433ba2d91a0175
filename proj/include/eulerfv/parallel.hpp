#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace eulerfv {

/// Persistent worker pool for index-range sweeps. Work is split into one
/// contiguous chunk per worker, so any writes to disjoint slots are race-free
/// and results do not depend on the worker count. Keeping the threads alive
/// matters: rhs() is called hundreds of thousands of times per run.
class ThreadPool {
 public:
  explicit ThreadPool(int threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int thread_count() const { return static_cast<int>(workers_.size()) + 1; }

  /// Run fn(begin, end) over [0, n) split into thread_count() chunks.
  /// The calling thread takes the first chunk.
  void for_range(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

 private:
  void worker_loop(std::size_t index);

  struct Task {
    const std::function<void(std::int64_t, std::int64_t)>* fn = nullptr;
    std::int64_t begin = 0;
    std::int64_t end = 0;
  };

  std::vector<std::thread> workers_;
  std::vector<Task> tasks_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  std::uint64_t generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
};

/// Serial fallback when no pool is supplied.
void chunked_for(std::int64_t n, ThreadPool* pool,
                 const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace eulerfv
