#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace cwlab {

/// Worker count used by the data-parallel kernels. Defaults to CWLAB_THREADS
/// when set, otherwise the hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the default

/// Evaluates fn(i) for i in [0, n) on the worker pool and returns the results
/// in index order. Output does not depend on the worker count.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Inclusive index range [first, last].
struct IndexRange {
  std::uint64_t first;
  std::uint64_t last;
};

/// Splits [first, last] into consecutive chunks of fixed size. The partition
/// depends only on the arguments, which keeps floating reductions reproducible.
std::vector<IndexRange> split_range(std::uint64_t first, std::uint64_t last,
                                    std::uint64_t chunk = std::uint64_t{1} << 14);

/// fn(range) over the chunks of [first, last], results in chunk order.
template <class Fn>
auto map_chunks(std::uint64_t first, std::uint64_t last, Fn&& fn) {
  const auto ranges = split_range(first, last);
  return parallel_map(ranges.size(), [&](std::size_t i) { return fn(ranges[i]); });
}

}  // namespace cwlab
