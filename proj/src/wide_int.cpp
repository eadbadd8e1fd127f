#include "cwlab/wide_int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

constexpr __int128 kMin = static_cast<__int128>(static_cast<unsigned __int128>(1) << 127);

[[noreturn]] void overflow(const char* op) {
  throw OverflowError(std::string("128-bit overflow in ") + op);
}

}  // namespace

WideInt WideInt::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidArgument("malformed integer: " + std::string(text));
  WideInt value;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw InvalidArgument("malformed integer: " + std::string(text));
    // Accumulate negatively so the most negative value parses.
    value = value * WideInt(10) - WideInt(c - '0');
  }
  return negative ? value : -value;
}

WideInt& WideInt::operator+=(WideInt rhs) {
  if (__builtin_add_overflow(v_, rhs.v_, &v_)) overflow("addition");
  return *this;
}

WideInt& WideInt::operator-=(WideInt rhs) {
  if (__builtin_sub_overflow(v_, rhs.v_, &v_)) overflow("subtraction");
  return *this;
}

WideInt& WideInt::operator*=(WideInt rhs) {
  if (__builtin_mul_overflow(v_, rhs.v_, &v_)) overflow("multiplication");
  return *this;
}

WideInt& WideInt::operator/=(WideInt rhs) {
  if (rhs.v_ == 0) throw InvalidArgument("division by zero");
  if (v_ == kMin && rhs.v_ == -1) overflow("division");
  v_ /= rhs.v_;
  return *this;
}

WideInt& WideInt::operator%=(WideInt rhs) {
  if (rhs.v_ == 0) throw InvalidArgument("division by zero");
  if (rhs.v_ == -1) {
    v_ = 0;
    return *this;
  }
  v_ %= rhs.v_;
  return *this;
}

WideInt WideInt::operator-() const {
  if (v_ == kMin) overflow("negation");
  return from_raw(-v_);
}

bool WideInt::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t WideInt::to_int64() const {
  if (!fits_int64()) overflow("narrowing to 64 bits");
  return static_cast<std::int64_t>(v_);
}

std::string WideInt::to_string() const {
  if (v_ == 0) return "0";
  std::string out;
  unsigned __int128 mag = v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1
                                 : static_cast<unsigned __int128>(v_);
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, WideInt v) { return os << v.to_string(); }

WideInt checked_pow(WideInt base, unsigned exp) {
  WideInt result(1);
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

}  // namespace cwlab
