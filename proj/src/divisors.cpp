#include "cwlab/divisors.hpp"

#include <cmath>
#include <limits>

#include "cwlab/errors.hpp"

namespace cwlab {

void DivisorSpec::validate() const {
  if (a < 2) throw InvalidArgument("restriction root a must be an integer >= 2, got " + std::to_string(a));
  if (alpha.sign() < 0) throw InvalidArgument("weight exponent alpha must be >= 0, got " + alpha.to_string());
}

std::string DivisorSpec::describe() const {
  return "a=" + std::to_string(a) + " alpha=" + alpha.to_string();
}

WideInt NumericValue::exact() const {
  if (const auto* w = std::get_if<WideInt>(&v_)) return *w;
  throw InvalidArgument("value is not exact (real weight exponent)");
}

long double NumericValue::approx() const {
  if (const auto* w = std::get_if<WideInt>(&v_)) return w->to_long_double();
  return std::get<long double>(v_);
}

HighPrec NumericValue::to_hp() const {
  if (const auto* w = std::get_if<WideInt>(&v_)) return cwlab::to_hp(*w);
  return HighPrec(std::get<long double>(v_));
}

std::string NumericValue::to_string() const {
  if (const auto* w = std::get_if<WideInt>(&v_)) return w->to_string();
  return format_hp(HighPrec(std::get<long double>(v_)), 21);
}

bool power_at_most(std::uint64_t d, int a, std::uint64_t n) {
  unsigned __int128 acc = 1;
  for (int i = 0; i < a; ++i) {
    acc *= d;
    if (acc > n) return false;
  }
  return true;
}

std::uint64_t integer_root(std::uint64_t n, int a) {
  if (a < 2) throw InvalidArgument("integer_root needs a >= 2, got " + std::to_string(a));
  if (n < 2) return n;
  auto root = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / a));
  while (root > 0 && !power_at_most(root, a, n)) --root;
  while (power_at_most(root + 1, a, n)) ++root;
  return root;
}

WideInt weight_exact(std::uint64_t d, const Rational& alpha) {
  return checked_pow(WideInt(d), static_cast<unsigned>(alpha.to_int64()));
}

long double weight_real(std::uint64_t d, const Rational& alpha) {
  if (alpha.is_integer()) {
    return std::pow(static_cast<long double>(d), static_cast<long double>(alpha.to_int64()));
  }
  return std::pow(static_cast<long double>(d), alpha.to_long_double());
}

void CompensatedSum::add(long double v) {
  const long double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

void CompensatedSum::add(const CompensatedSum& other) {
  add(other.sum_);
  add(other.comp_);
}

namespace {

// Walks divisor pairs (d, n/d) with d <= sqrt(n); keep(d) decides inclusion.
template <class Keep>
NumericValue weighted_divisor_sum(std::uint64_t n, const Rational& alpha, Keep keep) {
  if (n == 0) throw InvalidArgument("divisor sums need n >= 1");
  const std::uint64_t root = integer_root(n, 2);
  if (alpha.is_integer() && alpha.sign() >= 0) {
    WideInt total;
    for (std::uint64_t d = 1; d <= root; ++d) {
      if (n % d != 0) continue;
      const std::uint64_t e = n / d;
      if (keep(d)) total += weight_exact(d, alpha);
      if (e != d && keep(e)) total += weight_exact(e, alpha);
    }
    return total;
  }
  CompensatedSum total;
  for (std::uint64_t d = 1; d <= root; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    if (keep(d)) total.add(weight_real(d, alpha));
    if (e != d && keep(e)) total.add(weight_real(e, alpha));
  }
  return total.value();
}

}  // namespace

NumericValue divisor_sum_restricted(std::uint64_t n, const DivisorSpec& spec) {
  spec.validate();
  return weighted_divisor_sum(n, spec.alpha,
                              [&](std::uint64_t d) { return power_at_most(d, spec.a, n); });
}

WideInt tau(std::uint64_t n) {
  return weighted_divisor_sum(n, Rational(0), [](std::uint64_t) { return true; }).exact();
}

NumericValue sigma_alpha(std::uint64_t n, const Rational& alpha) {
  if (alpha.sign() < 0) throw InvalidArgument("alpha must be >= 0");
  return weighted_divisor_sum(n, alpha, [](std::uint64_t) { return true; });
}

int is_square(std::uint64_t n) {
  const std::uint64_t r = integer_root(n, 2);
  return r * r == n ? 1 : 0;
}

WideInt tau_tilde_via_identity(std::uint64_t n) {
  const WideInt twice = tau(n) + WideInt(is_square(n));
  if (twice % WideInt(2) != WideInt(0)) {
    throw InvariantBreach("tau(n) and the square indicator differ in parity at n=" + std::to_string(n));
  }
  return twice / WideInt(2);
}

}  // namespace cwlab
