#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace cycmds {

/// Runs body(i) for i in [0, count) on the OpenMP pool. Exceptions are
/// caught per index; the one with the smallest index is rethrown after the
/// loop so failures are reported identically to a serial run.
template <class Body>
void parallel_for_index(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <class Body>
void serial_for_index(std::size_t count, Body&& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace cycmds
