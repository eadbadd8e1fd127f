#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwlab/high_precision.hpp"

namespace cwlab {

/// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(WideInt n) : v_(to_big(n)) {}

  /// Accepts "p", "p/q", and finite decimals such as "-1.25" or "3e-2".
  static Rational parse(std::string_view text);
  /// Exact value of a finite binary floating-point number.
  static Rational from_double(long double v);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;
  int sign() const;

  /// Requires is_integer() and a value in int64 range.
  std::int64_t to_int64() const;
  long double to_long_double() const;
  HighPrec to_hp() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational floor() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Sums fractions n_i/d_i over a running common denominator, reducing once
/// at the end. Per-term cost is linear in the size of that denominator.
class FractionAccumulator {
 public:
  void add(const BigInt& num, const BigInt& den);
  void add(const Rational& r);
  Rational value() const;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace cwlab
