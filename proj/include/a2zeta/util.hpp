// Shared error types and a small helper for running independent work items
// on a bounded number of threads (A2ZETA_THREADS caps the pool).
#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>
#include <atomic>

namespace a2zeta {

// Bad arguments, unsupported parameter ranges, malformed input files.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural problems in a complex description (dangling refs, closure violations).
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

inline int thread_count() {
  if (const char* env = std::getenv("A2ZETA_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw == 0 ? 1 : static_cast<int>(hw);
  return n > 8 ? 8 : n;
}

// Runs fn(0..n-1); results must be written to per-index slots by the caller.
inline void parallel_for_index(int n, const std::function<void(int)>& fn) {
  int workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int k = workers < n ? workers : n;
  pool.reserve(k);
  for (int t = 0; t < k; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace a2zeta
