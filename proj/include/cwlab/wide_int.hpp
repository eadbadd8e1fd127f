#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cwlab {

/// Signed 128-bit integer whose arithmetic throws OverflowError instead of
/// wrapping. Used for exact divisor sums and their summatory totals.
class WideInt {
 public:
  using raw_type = __int128;

  constexpr WideInt() = default;
  constexpr WideInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr WideInt(std::uint64_t v) : v_(static_cast<raw_type>(v)) {}  // NOLINT
  constexpr WideInt(int v) : v_(v) {}  // NOLINT
  constexpr WideInt(unsigned v) : v_(v) {}  // NOLINT

  static constexpr WideInt from_raw(raw_type v) {
    WideInt w;
    w.v_ = v;
    return w;
  }

  /// Parses an optionally signed decimal string.
  static WideInt parse(std::string_view text);

  constexpr raw_type raw() const { return v_; }

  WideInt& operator+=(WideInt rhs);
  WideInt& operator-=(WideInt rhs);
  WideInt& operator*=(WideInt rhs);
  WideInt& operator/=(WideInt rhs);
  WideInt& operator%=(WideInt rhs);
  WideInt operator-() const;

  friend WideInt operator+(WideInt a, WideInt b) { return a += b; }
  friend WideInt operator-(WideInt a, WideInt b) { return a -= b; }
  friend WideInt operator*(WideInt a, WideInt b) { return a *= b; }
  friend WideInt operator/(WideInt a, WideInt b) { return a /= b; }
  friend WideInt operator%(WideInt a, WideInt b) { return a %= b; }

  friend constexpr bool operator==(WideInt a, WideInt b) = default;
  friend constexpr std::strong_ordering operator<=>(WideInt a, WideInt b) {
    return a.v_ <=> b.v_;
  }

  bool fits_int64() const;
  std::int64_t to_int64() const;
  long double to_long_double() const { return static_cast<long double>(v_); }
  std::string to_string() const;

 private:
  raw_type v_ = 0;
};

std::ostream& operator<<(std::ostream& os, WideInt v);

/// base^exp with overflow detection.
WideInt checked_pow(WideInt base, unsigned exp);

}  // namespace cwlab
