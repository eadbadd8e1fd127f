#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cwlab/cw_sums.hpp"
#include "cwlab/divisors.hpp"

namespace cwlab {

/// Largest x the brute-force oracle will accept.
inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

/// Oracle for sum_{n <= x} sigma_{a,alpha}(n): enumerates every pair (d, k)
/// with d*k <= x and k >= d^(a-1) one at a time. O(x log x).
/// Throws GuardExceeded above kBruteForceLimit.
NumericValue summatory_bruteforce(std::uint64_t x, const DivisorSpec& spec);

/// The same pair enumeration bucketed by n = d*k, giving the oracle value
/// for every x <= x_max at once. Integer alpha only.
class BruteForceTable {
 public:
  BruteForceTable(std::uint64_t x_max, const DivisorSpec& spec);

  std::uint64_t limit() const { return prefix_.size() - 1; }
  WideInt at(std::uint64_t x) const;

 private:
  std::vector<std::uint64_t> prefix_;
};

/// sum over d <= x^{1/a} of d^alpha (floor(x/d) - d^(a-1) + 1). O(x^{1/a}).
NumericValue summatory_floor_form(std::uint64_t x, const DivisorSpec& spec);

/// The floor form split through floor(t) = t - 1/2 - psi(t) into
///   x G_{a,alpha-1,0} - G_{a,alpha+a-1,0} + G_{a,alpha,0}/2 - G_{a,alpha,1}.
struct SummatoryBreakdown {
  std::uint64_t x = 0;
  DivisorSpec spec;
  GValue term_main;
  GValue term_power;
  GValue term_half;
  GValue term_psi;
  NumericValue total = WideInt(0);

  HighPrec components_sum() const;
  /// Exact sum of the four components, when all of them are exact.
  std::optional<Rational> components_exact() const;
};

/// Floor-form total plus its four-component breakdown. Throws
/// InvariantBreach if the components do not reassemble the total.
SummatoryBreakdown summatory_fast(std::uint64_t x, const DivisorSpec& spec);

}  // namespace cwlab
