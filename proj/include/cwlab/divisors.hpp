#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "cwlab/rational.hpp"
#include "cwlab/wide_int.hpp"

namespace cwlab {

/// Restriction root `a` and weight exponent `alpha` of sigma_{a,alpha}.
/// An integral alpha selects exact integer arithmetic; any other value is
/// evaluated in floating point.
struct DivisorSpec {
  int a = 2;
  Rational alpha = 0;

  bool exact() const { return alpha.is_integer(); }
  /// Throws InvalidArgument unless a >= 2 and alpha >= 0.
  void validate() const;
  std::string describe() const;
};

/// Exact WideInt in integer mode, long double otherwise.
class NumericValue {
 public:
  NumericValue(WideInt v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  NumericValue(long double v) : v_(v) {}    // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<WideInt>(v_); }
  WideInt exact() const;  // throws InvalidArgument in real mode
  long double approx() const;
  HighPrec to_hp() const;
  std::string to_string() const;

  friend bool operator==(const NumericValue&, const NumericValue&) = default;

 private:
  std::variant<WideInt, long double> v_;
};

/// Largest D with D^a <= n.
std::uint64_t integer_root(std::uint64_t n, int a);

/// True iff d^a <= n, decided by overflow-checked integer powering.
bool power_at_most(std::uint64_t d, int a, std::uint64_t n);

/// sigma_{a,alpha}(n): sum of d^alpha over divisors d of n with d^a <= n.
NumericValue divisor_sum_restricted(std::uint64_t n, const DivisorSpec& spec);

WideInt tau(std::uint64_t n);
NumericValue sigma_alpha(std::uint64_t n, const Rational& alpha);
int is_square(std::uint64_t n);
/// (tau(n) + [n is a square]) / 2.
WideInt tau_tilde_via_identity(std::uint64_t n);

/// d^alpha for the weight exponent of `spec`: exact in integer mode.
WideInt weight_exact(std::uint64_t d, const Rational& alpha);
long double weight_real(std::uint64_t d, const Rational& alpha);

/// Neumaier-compensated long double accumulator.
class CompensatedSum {
 public:
  void add(long double v);
  void add(const CompensatedSum& other);
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

}  // namespace cwlab
