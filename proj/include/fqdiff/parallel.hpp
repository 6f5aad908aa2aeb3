#pragma once

// Index-space reductions over [0, count). The OpenMP versions partition the
// range statically and reduce exact integers, so their results are identical
// to the serial versions for every thread count.

#include <cstdint>
#include <vector>

#include <omp.h>

namespace fqdiff::parallel {

void set_thread_count(int threads);
int thread_count();

template <class Term>
std::int64_t sum_serial(std::uint32_t count, Term&& term) {
  std::int64_t total = 0;
  for (std::uint32_t i = 0; i < count; ++i) total += term(i);
  return total;
}

template <class Term>
std::int64_t sum(std::uint32_t count, Term&& term) {
  std::int64_t total = 0;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) total += term(static_cast<std::uint32_t>(i));
  return total;
}

template <class Pred>
std::int64_t count_if(std::uint32_t count, Pred&& pred) {
  return sum(count, [&](std::uint32_t i) -> std::int64_t { return pred(i) ? 1 : 0; });
}

// Map over [0, count) writing one result per index; order of the output is the index order.
template <class T, class Fn>
std::vector<T> map(std::uint32_t count, Fn&& fn) {
  std::vector<T> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace fqdiff::parallel
