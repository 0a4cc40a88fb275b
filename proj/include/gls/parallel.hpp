#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gls {

// Global worker count used by all module-level parallel loops.
void set_workers(unsigned n);
unsigned workers();
// Reads GSL_THREADS, falling back to 1.
unsigned workers_from_env();

// Evaluates fn(0..n-1) on the worker pool. Results are returned in index
// order, so any reduction performed by the caller is deterministic.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace gls
