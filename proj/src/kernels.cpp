#include "scatter1d/kernels.hpp"

#include <cstdlib>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace scatter1d {

int thread_budget() {
  int threads = omp_get_max_threads();
  if (const char* env = std::getenv("SCATTER1D_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && cap < threads) threads = static_cast<int>(cap);
  }
  return threads < 1 ? 1 : threads;
}

void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace scatter1d
