#include "cwlab/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InvalidArgument("malformed number: " + std::string(whole));
  BigInt out = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("malformed number: " + std::string(whole));
    out = out * 10 + (c - '0');
  }
  return out;
}

BigInt pow10(unsigned e) { return mp::pow(BigInt(10), e); }

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  v_ = mp::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  const std::string whole(text);
  if (text.empty()) throw InvalidArgument("empty number");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_digits(text.substr(0, slash), whole);
    const BigInt den = parse_digits(text.substr(slash + 1), whole);
    out = Rational(num, den);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      const BigInt mag = parse_digits(exp_text, whole);
      if (mag > 4000) throw InvalidArgument("exponent too large: " + whole);
      exponent = static_cast<long>(mag) * (exp_negative ? -1 : 1);
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
      if (dot == 0 && mantissa.size() == 1) throw InvalidArgument("malformed number: " + whole);
    } else {
      digits = std::string(mantissa);
    }
    const BigInt value = parse_digits(digits, whole);
    out = exponent >= 0 ? Rational(value * pow10(static_cast<unsigned>(exponent)))
                        : Rational(value, pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? -out : out;
}

Rational Rational::from_double(long double v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite value has no rational form");
  if (v == 0) return Rational(0);
  int exp = 0;
  const long double mant = std::frexp(std::fabs(v), &exp);
  const auto scaled = static_cast<std::uint64_t>(std::ldexp(mant, 64));
  BigInt num = scaled;
  BigInt den = 1;
  const int shift = exp - 64;
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  Rational out(num, den);
  return v < 0 ? -out : out;
}

BigInt Rational::numerator() const { return mp::numerator(v_); }
BigInt Rational::denominator() const { return mp::denominator(v_); }
bool Rational::is_integer() const { return mp::denominator(v_) == 1; }
int Rational::sign() const { return v_.sign(); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw InvalidArgument("not an integer: " + to_string());
  const BigInt n = numerator();
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("integer out of 64-bit range: " + to_string());
  }
  return static_cast<std::int64_t>(n);
}

HighPrec Rational::to_hp() const {
  return HighPrec(numerator()) / HighPrec(denominator());
}

long double Rational::to_long_double() const { return to_hp().convert_to<long double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::floor() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

void FractionAccumulator::add(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw InvalidArgument("denominator must be positive");
  if (num == 0) return;
  const BigInt rem = den_ % den;
  if (rem == 0) {
    num_ += num * (den_ / den);
    return;
  }
  // New common denominator lcm(den_, den) = den_ * (den / g).
  const BigInt scale = den / gcd(den, rem);
  den_ *= scale;
  num_ *= scale;
  num_ += num * (den_ / den);
}

void FractionAccumulator::add(const Rational& r) { add(r.numerator(), r.denominator()); }

Rational FractionAccumulator::value() const { return Rational(num_, den_); }

}  // namespace cwlab
