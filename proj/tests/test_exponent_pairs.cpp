#include <doctest.h>

#include <functional>
#include <random>

#include "cwlab/asymptotics.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/exponent_pairs.hpp"

using namespace cwlab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
ExponentPair pair(const char* k, const char* l) { return ExponentPair(q(k), q(l)); }

bool in_domain(const ExponentPair& p) {
  return p.k() >= Rational(0) && p.k() <= q("1/2") && p.l() >= q("1/2") && p.l() <= Rational(1) &&
         p.k() <= p.l();
}

}  // namespace

TEST_SUITE("exponent_pairs") {
  TEST_CASE("single transforms") {
    CHECK(transform_A(pair("13/84", "55/84")) == pair("13/194", "76/97"));
    CHECK(transform_A(pair("0", "1/2")) == pair("0", "3/4"));
    CHECK(transform_A(pair("13/194", "76/97")) == pair("13/414", "359/414"));
    CHECK(transform_B(pair("13/414", "359/414")) == pair("76/207", "110/207"));
    CHECK(transform_B(pair("13/194", "76/97")) == pair("55/194", "55/97"));
  }

  TEST_CASE("words") {
    const ExponentPair seed = bourgain_seed();
    CHECK(seed == pair("13/84", "55/84"));
    CHECK(apply_word("BA^2", seed) == pair("76/207", "110/207"));
    CHECK(apply_word("BA", seed) == pair("55/194", "55/97"));
    CHECK(apply_word("", seed) == seed);
    CHECK(apply_word("BB", seed) == seed);
    CHECK(apply_word("A^2", seed) == apply_word("AA", seed));
    CHECK(apply_word("BA^2", seed).to_string() == "76/207,110/207");
    for (const char* bad : {"BC", "A^", "^2", "A^0x", "b"}) {
      CHECK_THROWS_AS(apply_word(bad, seed), InvalidArgument);
    }
  }

  TEST_CASE("pair validation and parsing") {
    CHECK_THROWS_AS(pair("3/5", "4/5"), InvalidArgument);
    CHECK_THROWS_AS(pair("1/4", "2/5"), InvalidArgument);
    CHECK_THROWS_AS(pair("-1/4", "3/5"), InvalidArgument);
    CHECK_THROWS_AS(ExponentPair::parse("1/4"), InvalidArgument);
    CHECK(ExponentPair::parse("1/6,2/3") == pair("1/6", "2/3"));
  }

  TEST_CASE("bound exponents") {
    const auto first = theorem4_exponents(apply_word("BA^2", bourgain_seed()), BernoulliCase::kFirst);
    CHECK(first.primary.constant == q("76/283"));
    CHECK(first.primary.per_inverse_a == q("34/283"));
    CHECK(first.primary.at(2) == q("76/283") + q("17/283"));
    CHECK(first.secondary.constant == Rational(-1));
    CHECK(first.secondary.per_inverse_a == Rational(2));

    const auto higher = theorem4_exponents(apply_word("BA", bourgain_seed()), BernoulliCase::kHigher);
    CHECK(higher.primary.constant == q("55/194"));
    CHECK(higher.primary.per_inverse_a == Rational(0));
    CHECK(higher.secondary.at(3) == q("-1/3"));

    // k = 1/2, l = 1/2 gives l - 2k < 0 with alpha = 0
    CHECK_THROWS_AS(theorem4_exponents(pair("1/2", "1/2"), BernoulliCase::kHigher), InvalidArgument);
    CHECK_NOTHROW(theorem4_exponents(pair("1/2", "1/2"), BernoulliCase::kHigher, Rational(1)));
  }

  TEST_CASE("settled range") {
    const auto range = conjecture2_settled_range(apply_word("BA", bourgain_seed()));
    REQUIRE(range.has_value());
    CHECK(range->lower == q("3/2"));
    REQUIRE(range->upper.has_value());
    CHECK(*range->upper == q("97/55"));
    CHECK(*range->upper == Rational(1) / (Rational(2) * q("55/194")));
    // offset exactly 1/3 pins the range to the single point 3/2; anything larger empties it
    const auto point = conjecture2_settled_range(pair("1/3", "2/3"));
    REQUIRE(point.has_value());
    CHECK(point->lower == q("3/2"));
    CHECK(point->upper == std::optional<Rational>(q("3/2")));
    CHECK_FALSE(conjecture2_settled_range(pair("2/5", "4/5")).has_value());
  }

  TEST_CASE("B is an involution") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t den = static_cast<std::int64_t>(rng() % 1000) + 2;
      const std::int64_t kn = static_cast<std::int64_t>(rng() % (den / 2 + 1));
      const Rational k = Rational(kn) / Rational(den);
      const std::int64_t lo = (den + 1) / 2;
      const Rational l = Rational(lo + static_cast<std::int64_t>(rng() % (den - lo + 1))) / Rational(den);
      const ExponentPair p(k, l);
      CHECK(apply_word("BB", p) == p);
    }
  }

  TEST_CASE("every short word keeps pairs in the domain") {
    std::size_t visited = 0;
    for (const auto& seed : {bourgain_seed(), pair("0", "1/2")}) {
      std::function<void(const ExponentPair&, int)> walk = [&](const ExponentPair& p, int depth) {
        ++visited;
        CHECK(in_domain(p));
        if (depth == 6) return;
        walk(transform_A(p), depth + 1);
        walk(transform_B(p), depth + 1);
      };
      walk(seed, 0);
    }
    CHECK(visited == 2 * 127);
  }
}
