#include "cwlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cwlab {

namespace {

std::atomic<unsigned> g_override{0};

unsigned default_threads() {
  if (const char* env = std::getenv("CWLAB_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Unparseable override falls through to hardware concurrency.
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

unsigned thread_count() {
  const unsigned o = g_override.load();
  if (o > 0) return o;
  static const unsigned fallback = default_threads();
  return fallback;
}

void set_thread_count(unsigned n) { g_override.store(n); }

std::vector<IndexRange> split_range(std::uint64_t first, std::uint64_t last, std::uint64_t chunk) {
  std::vector<IndexRange> out;
  if (first > last || chunk == 0) return out;
  for (std::uint64_t lo = first;; lo += chunk) {
    const std::uint64_t hi = (last - lo < chunk) ? last : lo + chunk - 1;
    out.push_back({lo, hi});
    if (hi == last) break;
  }
  return out;
}

}  // namespace cwlab
