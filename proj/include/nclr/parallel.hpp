#pragma once

// Index-parallel loop used by the verification sweeps. The serial path is
// the reference; the OpenMP path must produce the same per-index results.

#include <cstddef>
#include <exception>
#include <mutex>
#include <string_view>

namespace nclr {

enum class Execution { serial, parallel };

std::string_view to_string(Execution e);
// Number of OpenMP threads the parallel path will use.
int parallel_threads();

// Calls f(k) for k in [0, n). Work items must write only to their own slot.
// The first exception thrown by any item is rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
  if (exec == Execution::serial) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      f(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace nclr
