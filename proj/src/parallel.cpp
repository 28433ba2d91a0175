#include "eulerfv/parallel.hpp"

#include <algorithm>

namespace eulerfv {

ThreadPool::ThreadPool(int threads) {
  const int extra = std::max(0, threads - 1);
  tasks_.resize(static_cast<std::size_t>(extra));
  workers_.reserve(static_cast<std::size_t>(extra));
  for (int i = 0; i < extra; ++i) {
    workers_.emplace_back([this, i] { worker_loop(static_cast<std::size_t>(i)); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stop_ = true;
    ++generation_;
  }
  start_cv_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::worker_loop(std::size_t index) {
  std::uint64_t seen = 0;
  for (;;) {
    Task task;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      task = tasks_[index];
    }
    if (task.fn && task.begin < task.end) (*task.fn)(task.begin, task.end);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      --pending_;
    }
    done_cv_.notify_one();
  }
}

void ThreadPool::for_range(std::int64_t n,
                           const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const int parts = thread_count();
  if (parts == 1 || n < 2 * parts) {
    if (n > 0) fn(0, n);
    return;
  }
  const std::int64_t chunk = (n + parts - 1) / parts;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      const std::int64_t b = std::min<std::int64_t>(n, chunk * static_cast<std::int64_t>(i + 1));
      const std::int64_t e = std::min<std::int64_t>(n, chunk * static_cast<std::int64_t>(i + 2));
      tasks_[i] = Task{&fn, b, e};
    }
    pending_ = static_cast<int>(tasks_.size());
    ++generation_;
  }
  start_cv_.notify_all();
  fn(0, std::min<std::int64_t>(n, chunk));
  std::unique_lock<std::mutex> lock(mutex_);
  done_cv_.wait(lock, [&] { return pending_ == 0; });
}

void chunked_for(std::int64_t n, ThreadPool* pool,
                 const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (pool) {
    pool->for_range(n, fn);
  } else if (n > 0) {
    fn(0, n);
  }
}

}  // namespace eulerfv
