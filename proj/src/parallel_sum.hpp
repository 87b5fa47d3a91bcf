#pragma once

#include <cstddef>
#include <exception>

#include <omp.h>

#include "taut/rational.hpp"

namespace taut::detail {

// sum_{i < count} term(i), with indices spread over OpenMP threads. Exact
// addition makes the result independent of the schedule. The first exception
// thrown by any term is rethrown on the calling thread.
template <class F>
Rational parallel_sum(std::size_t count, F&& term) {
  Rational total;
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel
  {
    Rational local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long long i = 0; i < n; ++i) {
      try {
        local += term(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(taut_parallel_sum_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(taut_parallel_sum_total)
    total += local;
  }
  if (error) std::rethrow_exception(error);
  return total;
}

}  // namespace taut::detail
