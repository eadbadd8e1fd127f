#include "cwlab/high_precision.hpp"

#include <ios>
#include <mutex>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

const HighPrec kEulerGamma{"0.57721566490153286060651209008240243104215933593992"};

}  // namespace

HighPrec euler_gamma_independent() {
  constexpr int n = 10000;
  HighPrec harmonic = 0;
  for (int d = n; d >= 1; --d) harmonic += HighPrec(1) / d;
  const HighPrec big_n = n;
  const HighPrec inv2 = 1 / (big_n * big_n);
  HighPrec tail = -1 / (2 * big_n);
  tail += inv2 / 12;
  tail -= inv2 * inv2 / 120;
  tail += inv2 * inv2 * inv2 / 252;
  tail -= inv2 * inv2 * inv2 * inv2 / 240;
  return harmonic - log(big_n) + tail;
}

const HighPrec& euler_gamma() {
  static std::once_flag checked;
  std::call_once(checked, [] {
    const HighPrec diff = abs(euler_gamma_independent() - kEulerGamma);
    if (diff > HighPrec("1e-20")) {
      throw InvariantBreach("stored Euler-Mascheroni constant disagrees with recomputation by " +
                            format_hp(diff, 5));
    }
  });
  return kEulerGamma;
}

BigInt to_big(WideInt v) {
  const __int128 raw = v.raw();
  const bool negative = raw < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(raw + 1)) + 1
                                   : static_cast<unsigned __int128>(raw);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

WideInt to_wide(const BigInt& v) {
  static const BigInt max_value = (BigInt(1) << 127) - 1;
  static const BigInt min_value = -(BigInt(1) << 127);
  if (v > max_value || v < min_value) throw OverflowError("value does not fit in 128 bits");
  const bool negative = v < 0;
  const BigInt mag = abs(v);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag & BigInt(~std::uint64_t{0}));
  unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
  if (negative) u = ~u + 1;
  return WideInt::from_raw(static_cast<__int128>(u));
}

HighPrec to_hp(WideInt v) { return HighPrec(to_big(v)); }

std::string format_hp(const HighPrec& v, int digits) {
  return v.str(digits - 1, std::ios_base::scientific);
}

HighPrec parse_hp(std::string_view text) {
  try {
    return HighPrec(std::string(text));
  } catch (const std::exception&) {
    throw InvalidArgument("malformed real number: " + std::string(text));
  }
}

}  // namespace cwlab
