#include "gls/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace gls {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_workers(unsigned n) { g_workers = n == 0 ? 1 : n; }

unsigned workers_from_env() {
  if (const char* env = std::getenv("GSL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

unsigned workers() {
  unsigned w = g_workers.load();
  if (w == 0) {
    w = workers_from_env();
    g_workers = w;
  }
  return w;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned w = std::min<std::size_t>(workers(), n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gls
