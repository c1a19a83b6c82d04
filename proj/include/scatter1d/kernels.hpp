#pragma once

// Data-parallel index loops. Every kernel in the library takes an Execution
// argument; the serial path is the reference the parallel one is tested
// against, and both write results by index so output order never depends on
// scheduling.

#include <cstddef>
#include <functional>

namespace scatter1d {

enum class Execution { serial, parallel };

// OpenMP thread budget, capped by SCATTER1D_THREADS when set to a positive
// integer.
int thread_budget();

// Calls body(i) for i in [0, n). With Execution::parallel the iterations are
// spread over thread_budget() threads. If any body throws, the exception from
// the smallest failing index is rethrown after the loop.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

}  // namespace scatter1d
