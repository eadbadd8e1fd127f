#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwlab/high_precision.hpp"
#include "cwlab/rational.hpp"

namespace cwlab {

inline constexpr int kMaxBernoulliDegree = 64;

/// Monomial coefficients of B_j, lowest degree first (length j + 1).
/// Generated from B_0 = 1, B_j' = j B_{j-1} and a vanishing integral over
/// [0, 1]; memoized and safe to call concurrently.
std::span<const Rational> bernoulli_coefficients(int j);

Rational bernoulli_poly(int j, const Rational& x);
/// Exact rational Horner evaluation, rounded once to double.
double bernoulli_poly(int j, double x);
HighPrec bernoulli_poly(int j, const HighPrec& x);

/// Sawtooth x - floor(x) - 1/2, in [-1/2, 1/2).
Rational psi(const Rational& x);
Rational psi(std::int64_t num, std::int64_t den);
double psi(double x);

/// Periodic Bernoulli function B_j({x}), j >= 1. Equals psi for j = 1.
Rational bernoulli_func(int j, const Rational& x);
double bernoulli_func(int j, double x);

/// Symmetric partial sum over 0 < |m| <= terms of
/// -j!/(2 pi i)^j * e(m t)/m^j, folded into real cosine or sine form.
/// Requires j >= 2.
double bernoulli_fourier_truncated(int j, double t, int terms);

/// Fast evaluator for inner loops: caches B_j's coefficients in HighPrec and
/// long double.
class BernoulliEvaluator {
 public:
  explicit BernoulliEvaluator(int j);

  int degree() const { return j_; }
  HighPrec operator()(const HighPrec& t) const;
  long double operator()(long double t) const;

 private:
  int j_;
  std::vector<HighPrec> hp_;
  std::vector<long double> ld_;
};

}  // namespace cwlab
