#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cwlab/wide_int.hpp"

namespace cwlab {

/// 50 significant decimal digits; every main term and residual is evaluated
/// in this type.
using HighPrec = boost::multiprecision::cpp_bin_float_50;

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Digits written when a HighPrec value is serialized.
inline constexpr int kEmitDigits = 30;

/// Euler-Mascheroni constant to 50 digits. The first call cross-checks the
/// stored literal against euler_gamma_independent() and throws
/// InvariantBreach if they disagree beyond 1e-20.
const HighPrec& euler_gamma();

/// gamma from H_N - log N with Euler-Maclaurin tail corrections (N = 10^4).
HighPrec euler_gamma_independent();

BigInt to_big(WideInt v);
WideInt to_wide(const BigInt& v);  // throws OverflowError when out of range
HighPrec to_hp(WideInt v);

/// Scientific notation with `digits` significant digits.
std::string format_hp(const HighPrec& v, int digits = kEmitDigits);
HighPrec parse_hp(std::string_view text);

}  // namespace cwlab
