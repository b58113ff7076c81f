#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

// Two interchangeable fork-join backends behind parallel_for: OpenMP by
// default, plain std::thread when GB_PARALLEL_STDTHREAD is defined (the
// thread-sanitizer build uses it, since tsan cannot see OpenMP's
// barriers). Semantics are identical: dynamic chunking, no nesting (a
// parallel_for inside a worker runs serially), worker_id() < num_workers().

#if defined(GB_PARALLEL_STDTHREAD)

#include <algorithm>
#include <thread>

namespace gb {

namespace detail {
inline std::atomic<int>& worker_limit() {
  static std::atomic<int> limit{
      static_cast<int>(std::thread::hardware_concurrency())};
  return limit;
}
inline thread_local int tls_worker_id = 0;
inline thread_local bool tls_in_parallel = false;
}  // namespace detail

inline int num_workers() { return detail::worker_limit().load(); }

inline void set_num_workers(int n) {
  if (n > 0) detail::worker_limit().store(n);
}

inline int worker_id() { return detail::tls_worker_id; }

template <class F>
void parallel_for(size_t begin, size_t end, F&& f, size_t grain = 1024) {
  if (end <= begin) return;
  int workers = num_workers();
  if (end - begin < grain || workers <= 1 || detail::tls_in_parallel) {
    for (size_t i = begin; i < end; ++i) f(i);
    return;
  }
  std::atomic<size_t> cursor{begin};
  constexpr size_t kChunk = 64;
  auto work = [&](int id) {
    detail::tls_worker_id = id;
    detail::tls_in_parallel = true;
    while (true) {
      size_t lo = cursor.fetch_add(kChunk, std::memory_order_relaxed);
      if (lo >= end) break;
      size_t hi = std::min(end, lo + kChunk);
      for (size_t i = lo; i < hi; ++i) f(i);
    }
    detail::tls_in_parallel = false;
    detail::tls_worker_id = 0;
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < workers; ++t) threads.emplace_back(work, t);
  work(0);
  for (auto& t : threads) t.join();
}

}  // namespace gb

#else  // OpenMP backend

#include <omp.h>

namespace gb {

inline int num_workers() { return omp_get_max_threads(); }

inline void set_num_workers(int n) {
  if (n > 0) omp_set_num_threads(n);
}

// Index of the calling worker in the outermost team. Inside a nested
// region omp_get_thread_num() restarts at 0, which would alias
// per-worker buffers across outer threads.
inline int worker_id() {
  return omp_get_level() <= 1 ? omp_get_thread_num()
                              : omp_get_ancestor_thread_num(1);
}

template <class F>
void parallel_for(size_t begin, size_t end, F&& f, size_t grain = 1024) {
  if (end <= begin) return;
  if (end - begin < grain || num_workers() <= 1) {
    for (size_t i = begin; i < end; ++i) f(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t i = static_cast<int64_t>(begin); i < static_cast<int64_t>(end);
       ++i) {
    f(static_cast<size_t>(i));
  }
}

}  // namespace gb

#endif

namespace gb {

template <class T>
bool atomic_write_min(std::atomic<T>& cell, T value) {
  T cur = cell.load(std::memory_order_relaxed);
  while (value < cur) {
    if (cell.compare_exchange_weak(cur, value, std::memory_order_relaxed))
      return true;
  }
  return false;
}

// One bit per index, packed in 64-bit words. fetch_or-based claiming.
class AtomicBitset {
 public:
  explicit AtomicBitset(size_t n) : n_(n), words_((n + 63) / 64) {
    for (auto& w : words_) w.store(0, std::memory_order_relaxed);
  }

  size_t size() const { return n_; }

  bool test(size_t i) const {
    return (words_[i >> 6].load(std::memory_order_relaxed) >> (i & 63)) & 1;
  }

  // True iff this call flipped the bit from 0 to 1.
  bool try_claim(size_t i) {
    uint64_t mask = uint64_t{1} << (i & 63);
    uint64_t old = words_[i >> 6].fetch_or(mask, std::memory_order_relaxed);
    return (old & mask) == 0;
  }

  void clear(size_t i) {
    words_[i >> 6].fetch_and(~(uint64_t{1} << (i & 63)),
                             std::memory_order_relaxed);
  }

 private:
  size_t n_;
  std::vector<std::atomic<uint64_t>> words_;
};

}  // namespace gb
