#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "cwlab/bernoulli.hpp"
#include "cwlab/errors.hpp"

using namespace cwlab;

namespace {

// Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0, independent of the
// polynomial recurrence under test. B_1 = -1/2 in this convention.
std::vector<Rational> bernoulli_numbers(int count) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n < count; ++n) {
    Rational acc = 0;
    BigInt binom = 1;  // C(n+1, 0)
    for (int k = 0; k < n; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b.push_back(-acc / Rational(binom));
  }
  return b;
}

}  // namespace

TEST_SUITE("bernoulli") {
  TEST_CASE("polynomial values") {
    CHECK(bernoulli_poly(0, 7.3) == 1.0);
    CHECK(bernoulli_poly(1, 0.5) == 0.0);
    CHECK(bernoulli_poly(2, Rational(0)) == Rational(BigInt(1), BigInt(6)));
    CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(bernoulli_poly(2, HighPrec(0)) == Rational(BigInt(1), BigInt(6)).to_hp());
  }

  TEST_CASE("coefficients obey the defining recurrence exactly") {
    for (int j = 1; j <= 20; ++j) {
      const auto c = bernoulli_coefficients(j);
      const auto prev = bernoulli_coefficients(j - 1);
      REQUIRE(c.size() == static_cast<std::size_t>(j + 1));
      for (std::size_t i = 1; i < c.size(); ++i) {
        CHECK(c[i] * Rational(static_cast<std::int64_t>(i)) == Rational(j) * prev[i - 1]);
      }
      Rational integral = 0;
      for (std::size_t i = 0; i < c.size(); ++i) integral += c[i] / Rational(static_cast<std::int64_t>(i + 1));
      CHECK(integral == Rational(0));
    }
  }

  TEST_CASE("constant terms are the Bernoulli numbers") {
    const auto numbers = bernoulli_numbers(31);
    for (int j = 0; j <= 30; ++j) CHECK(bernoulli_poly(j, Rational(0)) == numbers[j]);
  }

  TEST_CASE("sawtooth") {
    CHECK(psi(3.0) == -0.5);
    CHECK(psi(2.5) == 0.0);
    CHECK(psi(Rational(BigInt(10), BigInt(3))) == Rational(BigInt(-1), BigInt(6)));
    CHECK(psi(10, 3) == Rational(BigInt(-1), BigInt(6)));
    CHECK(psi(-1, 4) == Rational(BigInt(1), BigInt(4)));
  }

  TEST_CASE("periodic Bernoulli function") {
    CHECK(bernoulli_func(1, 7.25) == -0.25);
    CHECK(bernoulli_func(2, 5.0) == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(bernoulli_func(2, 0.5) == doctest::Approx(-1.0 / 12).epsilon(1e-15));
    CHECK(bernoulli_func(2, Rational(BigInt(11), BigInt(2))) == Rational(BigInt(-1), BigInt(12)));
    CHECK_THROWS_AS(bernoulli_func(0, 0.3), InvalidArgument);
    CHECK_THROWS_AS(bernoulli_coefficients(kMaxBernoulliDegree + 1), InvalidArgument);
  }

  TEST_CASE("truncated Fourier series") {
    // One pair m = +-1 at t = 1/2: (1/pi^2) cos(pi).
    const double pi = std::numbers::pi;
    CHECK(bernoulli_fourier_truncated(2, 0.5, 1) == doctest::Approx(-1 / (pi * pi)).epsilon(1e-14));
    CHECK(std::fabs(bernoulli_fourier_truncated(2, 0.0, 10000) - 1.0 / 6) <= 1e-4);
    CHECK(std::fabs(bernoulli_fourier_truncated(3, 0.25, 10000) - bernoulli_func(3, 0.25)) <= 1e-3);
    CHECK_THROWS_AS(bernoulli_fourier_truncated(1, 0.25, 10), InvalidArgument);
    CHECK_THROWS_AS(bernoulli_fourier_truncated(2, 0.25, 0), InvalidArgument);
  }

  TEST_CASE("periodicity over random points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-10, 10);
    for (int i = 0; i < 10000; ++i) {
      const double x = dist(rng);
      for (int j = 1; j <= 6; ++j) CHECK(std::fabs(bernoulli_func(j, x + 1) - bernoulli_func(j, x)) <= 1e-12);
    }
  }

  TEST_CASE("central differences recover j B_{j-1}") {
    const double h = 1e-6;
    for (int j = 1; j <= 6; ++j) {
      for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        const double diff = (bernoulli_poly(j, x + h) - bernoulli_poly(j, x - h)) / (2 * h);
        CHECK(std::fabs(diff - j * bernoulli_poly(j - 1, x)) <= 1e-6);
      }
    }
  }

  TEST_CASE("composite Simpson integral over [0,1] vanishes") {
    const int panels = 10000;
    const double h = 1.0 / panels;
    for (int j = 1; j <= 6; ++j) {
      const BernoulliEvaluator b(j);
      long double sum = b(0.0L) + b(1.0L);
      for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4 : 2) * b(static_cast<long double>(i * h));
      CHECK(std::fabs(static_cast<double>(sum * h / 3)) <= 1e-10);
    }
  }

  TEST_CASE("memo table tolerates concurrent first use") {
    std::vector<std::jthread> threads;
    std::vector<std::string> seen(8);
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([t, &seen] { seen[t] = bernoulli_coefficients(40 + t)[0].to_string(); });
    }
    threads.clear();
    for (int t = 0; t < 8; ++t) CHECK(seen[t] == bernoulli_poly(40 + t, Rational(0)).to_string());
  }
}
