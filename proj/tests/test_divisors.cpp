#include <doctest.h>

#include <cmath>
#include <random>

#include "cwlab/divisors.hpp"
#include "cwlab/errors.hpp"

using namespace cwlab;

namespace {

// d^a <= n by repeated multiplication in 128 bits.
bool fits_power(unsigned __int128 d, int a, std::uint64_t n) {
  unsigned __int128 p = 1;
  for (int i = 0; i < a; ++i) {
    p *= d;
    if (p > n) return false;
  }
  return true;
}

// Scans every candidate divisor; slow but obviously right.
WideInt naive_restricted(std::uint64_t n, int a, int alpha) {
  WideInt sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0 || !fits_power(d, a, n)) continue;
    sum += checked_pow(WideInt(d), static_cast<unsigned>(alpha));
  }
  return sum;
}

}  // namespace

TEST_SUITE("divisors") {
  TEST_CASE("integer roots") {
    CHECK(integer_root(64, 3) == 4);
    CHECK(integer_root(63, 3) == 3);
    CHECK(integer_root(0, 5) == 0);
    CHECK(integer_root(1, 7) == 1);
    CHECK(integer_root(UINT64_MAX, 2) == 4294967295ULL);
    CHECK(integer_root(UINT64_MAX, 64) == 1);
    CHECK_THROWS_AS(integer_root(10, 1), InvalidArgument);
  }

  TEST_CASE("root exactness on random inputs up to 1e18") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1'000'000'000'000'000'000ULL);
    for (int i = 0; i < 100000; ++i) {
      const std::uint64_t n = dist(rng);
      const int a = 2 + static_cast<int>(rng() % 5);
      const std::uint64_t d = integer_root(n, a);
      CHECK(fits_power(d, a, n));
      CHECK_FALSE(fits_power(static_cast<unsigned __int128>(d) + 1, a, n));
    }
  }

  TEST_CASE("roots at perfect powers and their neighbours") {
    for (std::uint64_t d = 2; d <= 1000; ++d) {
      for (int a = 2; a <= 6; ++a) {
        unsigned __int128 p = 1;
        for (int i = 0; i < a; ++i) p *= d;
        if (p > 1'000'000'000'000'000'000ULL) break;
        const auto n = static_cast<std::uint64_t>(p);
        CHECK(integer_root(n, a) == d);
        CHECK(integer_root(n - 1, a) == d - 1);
      }
    }
  }

  TEST_CASE("simple arithmetic functions") {
    CHECK(is_square(36) == 1);
    CHECK(is_square(35) == 0);
    CHECK(is_square(0) == 1);
    CHECK(sigma_alpha(6, 1).exact() == WideInt(12));
    CHECK(tau(12) == WideInt(6));
    CHECK(tau(1) == WideInt(1));
    CHECK(tau_tilde_via_identity(36) == WideInt(5));
    CHECK(tau_tilde_via_identity(12) == WideInt(3));
    CHECK(tau_tilde_via_identity(1) == WideInt(1));
    CHECK(divisor_sum_restricted(36, {2, 0}).exact() == WideInt(5));
    CHECK(divisor_sum_restricted(36, {2, 1}).exact() == WideInt(1 + 2 + 3 + 4 + 6));
    CHECK(divisor_sum_restricted(64, {3, 1}).exact() == WideInt(1 + 2 + 4));
  }

  TEST_CASE("restricted sums match the naive scan") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      for (int a = 2; a <= 4; ++a) {
        for (int alpha = 0; alpha <= 3; ++alpha) {
          CHECK(divisor_sum_restricted(n, {a, alpha}).exact() == naive_restricted(n, a, alpha));
        }
      }
    }
  }

  TEST_CASE("identity sweep") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      REQUIRE(divisor_sum_restricted(n, {2, 0}).exact() == tau_tilde_via_identity(n));
    }
  }

  TEST_CASE("restricted sum never exceeds the full divisor sum") {
    for (int a = 2; a <= 4; ++a) {
      for (int alpha = 0; alpha <= 2; ++alpha) {
        for (std::uint64_t n = 1; n <= 100000; ++n) {
          REQUIRE(divisor_sum_restricted(n, {a, alpha}).exact() <= sigma_alpha(n, alpha).exact());
        }
      }
    }
  }

  TEST_CASE("boundary divisor of a perfect power is counted") {
    for (std::uint64_t d = 1; d <= 50; ++d) {
      for (int a = 2; a <= 4; ++a) {
        std::uint64_t n = 1;
        for (int i = 0; i < a; ++i) n *= d;
        // removing d from the range must drop the count by exactly one
        const WideInt with = divisor_sum_restricted(n, {a, 0}).exact();
        WideInt below = 0;
        for (std::uint64_t e = 1; e < d; ++e) below += WideInt(n % e == 0 ? 1 : 0);
        CHECK(with == below + WideInt(1));
      }
    }
  }

  TEST_CASE("real exponent path") {
    const auto v = divisor_sum_restricted(12, {2, Rational::parse("1/2")});
    CHECK_FALSE(v.is_exact());
    CHECK(v.approx() == doctest::Approx(1 + std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS((void)v.exact(), InvalidArgument);
    const auto s = sigma_alpha(12, Rational::parse("0.5"));
    CHECK(s.approx() == doctest::Approx(1 + std::sqrt(2.0) + std::sqrt(3.0) + 2 + std::sqrt(6.0) +
                                        std::sqrt(12.0)).epsilon(1e-15));
  }

  TEST_CASE("invalid specs and overflow") {
    CHECK_THROWS_AS(divisor_sum_restricted(10, {1, 0}), InvalidArgument);
    CHECK_THROWS_AS(divisor_sum_restricted(10, {2, -1}), InvalidArgument);
    CHECK_THROWS_AS(tau_tilde_via_identity(0), InvalidArgument);
    // 2^20 is a divisor below the root; its 10th power needs 200 bits
    CHECK_THROWS_AS(divisor_sum_restricted(std::uint64_t{1} << 40, {2, 10}), OverflowError);
  }

  TEST_CASE("compensated summation") {
    CompensatedSum s;
    s.add(1e20L);
    for (int i = 0; i < 1000; ++i) s.add(1.0L);
    s.add(-1e20L);
    CHECK(s.value() == 1000.0L);
  }
}
