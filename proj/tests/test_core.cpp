#include <doctest.h>

#include <random>
#include <thread>

#include "cwlab/errors.hpp"
#include "cwlab/high_precision.hpp"
#include "cwlab/parallel.hpp"
#include "cwlab/rational.hpp"
#include "cwlab/wide_int.hpp"

using namespace cwlab;

TEST_SUITE("core") {
  TEST_CASE("WideInt arithmetic fails loudly on overflow") {
    const WideInt big = WideInt::parse("170141183460469231731687303715884105727");  // 2^127 - 1
    CHECK(big.to_string() == "170141183460469231731687303715884105727");
    CHECK_THROWS_AS(big + WideInt(1), OverflowError);
    CHECK_THROWS_AS(big * WideInt(2), OverflowError);
    const WideInt low = -big - WideInt(1);
    CHECK(low.to_string() == "-170141183460469231731687303715884105728");
    CHECK(WideInt::parse(low.to_string()) == low);
    CHECK_THROWS_AS(-low, OverflowError);
    CHECK_THROWS_AS(low / WideInt(-1), OverflowError);
    CHECK_THROWS_AS(WideInt(1) / WideInt(0), InvalidArgument);
    CHECK(checked_pow(WideInt(10), 38).to_string() == "1" + std::string(38, '0'));
    CHECK_THROWS_AS(checked_pow(WideInt(10), 39), OverflowError);
    CHECK_THROWS_AS(WideInt::parse("12a"), InvalidArgument);
  }

  TEST_CASE("WideInt and BigInt convert losslessly") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
      const auto hi = static_cast<__int128>(static_cast<std::int64_t>(rng()));
      const WideInt v = WideInt::from_raw((hi << 64) | static_cast<__int128>(rng()));
      CHECK(to_wide(to_big(v)) == v);
      CHECK(to_big(v).str() == v.to_string());
    }
    CHECK_THROWS_AS(to_wide(BigInt(1) << 127), OverflowError);
  }

  TEST_CASE("Rational parsing is exact and canonical") {
    CHECK(Rational::parse("6/8").to_string() == "3/4");
    CHECK(Rational::parse("-1.25").to_string() == "-5/4");
    CHECK(Rational::parse("3e-2").to_string() == "3/100");
    CHECK(Rational::parse("1.5E2").to_string() == "150");
    CHECK(Rational::parse("0.5") == Rational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("abc"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse(""), InvalidArgument);
    CHECK(Rational::from_double(0.375L).to_string() == "3/8");
    CHECK(Rational::from_double(-3.0L).to_string() == "-3");
    CHECK(Rational::parse("-7/2").floor() == Rational(-4));
    CHECK(Rational::parse("7/2").floor() == Rational(3));
  }

  TEST_CASE("fraction accumulator matches pairwise rational addition") {
    std::mt19937_64 rng(2);
    FractionAccumulator acc;
    Rational naive = 0;
    for (int i = 0; i < 300; ++i) {
      const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
      const auto den = static_cast<std::int64_t>(rng() % 500) + 1;
      acc.add(BigInt(num), BigInt(den));
      naive += Rational(BigInt(num), BigInt(den));
    }
    CHECK(acc.value() == naive);
  }

  TEST_CASE("30-digit serialization round-trips") {
    const HighPrec v = HighPrec(2) / 3;
    const std::string s = format_hp(v);
    CHECK(s == "6.66666666666666666666666666667e-01");
    CHECK(format_hp(parse_hp(s)) == s);
    CHECK_THROWS_AS(parse_hp("x1"), InvalidArgument);
  }

  TEST_CASE("Euler-Mascheroni constant agrees with its recomputation") {
    CHECK(abs(euler_gamma() - euler_gamma_independent()) < HighPrec("1e-30"));
  }

  TEST_CASE("parallel_map keeps index order for any worker count") {
    for (unsigned workers : {1U, 3U, 8U}) {
      set_thread_count(workers);
      const auto out = parallel_map(1000, [](std::size_t i) { return i * i; });
      for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
    }
    set_thread_count(0);
    CHECK_THROWS_AS(parallel_map(10, [](std::size_t i) -> int {
                      if (i == 4) throw InvalidArgument("boom");
                      return 0;
                    }),
                    InvalidArgument);
  }

  TEST_CASE("split_range tiles the interval") {
    const auto r = split_range(5, 100, 10);
    CHECK(r.front().first == 5);
    CHECK(r.back().last == 100);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i].first == r[i - 1].last + 1);
    CHECK(split_range(3, 2).empty());
  }
}
