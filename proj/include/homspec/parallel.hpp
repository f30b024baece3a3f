#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace homspec {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Applies fn(i) -> std::vector<T> for i in [0, count) and concatenates the
/// results in index order, so the output is independent of the thread count.
template <class T, class Fn>
std::vector<T> parallel_flat_map(size_t count, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  std::vector<std::vector<T>> partial(count);
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) partial[i] = fn(i);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          partial[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<size_t>(threads, count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
  }
  std::vector<T> out;
  size_t total = 0;
  for (const auto& p : partial) total += p.size();
  out.reserve(total);
  for (auto& p : partial)
    for (auto& e : p) out.push_back(std::move(e));
  return out;
}

}  // namespace homspec
