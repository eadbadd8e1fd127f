#include "cwlab/cw_sums.hpp"

#include <cmath>
#include <limits>

#include "cwlab/bernoulli.hpp"
#include "cwlab/divisors.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/parallel.hpp"

namespace cwlab {

namespace mp = boost::multiprecision;

EvalPoint parse_point(const std::string& text) {
  const Rational r = Rational::parse(text);
  const bool looks_integral = text.find_first_of(".eE/") == std::string::npos;
  if (looks_integral) return r.to_int64();
  return r.to_long_double();
}

std::string format_point(const EvalPoint& x) {
  if (const auto* i = std::get_if<std::int64_t>(&x)) return std::to_string(*i);
  return format_hp(HighPrec(std::get<long double>(x)), 21);
}

long double point_value(const EvalPoint& x) {
  if (const auto* i = std::get_if<std::int64_t>(&x)) return static_cast<long double>(*i);
  return std::get<long double>(x);
}

void GSumSpec::validate() const {
  if (a <= Rational(1)) throw InvalidArgument("a must exceed 1, got " + a.to_string());
  if (j < 0 || j > kMaxBernoulliDegree) throw InvalidArgument("j out of range: " + std::to_string(j));
  if (j >= 1 && alpha.sign() < 0) {
    throw InvalidArgument("negative alpha is only allowed for j = 0, got alpha=" + alpha.to_string());
  }
  const long double xv = point_value(x);
  if (!std::isfinite(xv) || xv < 0) throw InvalidArgument("x must be a finite value >= 0");
}

std::uint64_t g_cutoff(const Rational& a, const EvalPoint& x) {
  if (a <= Rational(1)) throw InvalidArgument("a must exceed 1");
  const long double xv = point_value(x);
  if (xv < 1) return 0;
  if (a.is_integer()) {
    const auto floor_x = static_cast<std::uint64_t>(std::floor(xv));
    const BigInt big_a = a.numerator();
    if (big_a > 64) return 1;  // 2^a already exceeds every 64-bit x
    return integer_root(floor_x, static_cast<int>(big_a));
  }
  // a = p/q: d^a <= x  <=>  d^p * y^q <= X^q for x = X/y.
  const Rational xr = std::holds_alternative<std::int64_t>(x) ? Rational(std::get<std::int64_t>(x))
                                                               : Rational::from_double(xv);
  const auto p = static_cast<unsigned>(a.numerator());
  const auto q = static_cast<unsigned>(a.denominator());
  const BigInt rhs = mp::pow(xr.numerator(), q);
  const BigInt scale = mp::pow(xr.denominator(), q);
  auto fits = [&](std::uint64_t d) { return mp::pow(BigInt(d), p) * scale <= rhs; };
  auto root = static_cast<std::uint64_t>(std::exp(std::log(xv) / a.to_long_double()));
  while (root > 0 && !fits(root)) --root;
  while (fits(root + 1)) ++root;
  return root;
}

namespace {

enum class Route {
  kFloat,           // real x: long double, compensated
  kIntegerPowers,   // j = 0, alpha >= 0 integer: exact integer
  kReciprocals,     // j = 0, alpha < 0 integer: exact fractions
  kWeightedPsi,     // j = 1, alpha >= 1 integer: exact half-integers
  kPlainPsi,        // j = 1, alpha = 0: exact fractions
  kHighPrecision,   // everything else in exact mode
};

Route pick_route(const GSumSpec& spec) {
  if (!spec.exact_mode()) return Route::kFloat;
  if (!spec.alpha.is_integer() || spec.j >= 2) return Route::kHighPrecision;
  const std::int64_t alpha = spec.alpha.to_int64();
  if (spec.j == 0) return alpha >= 0 ? Route::kIntegerPowers : Route::kReciprocals;
  return alpha >= 1 ? Route::kWeightedPsi : Route::kPlainPsi;
}

// Partial sums of one chunk. Only the fields of the active route are used.
struct Partial {
  BigInt first = 0;   // sum d^alpha, or sum d^(alpha-1) r_d
  BigInt second = 0;  // sum d^alpha for the weighted psi route
  FractionAccumulator fraction;
  HighPrec high = 0;
  CompensatedSum low;
};

BigInt power_big(std::uint64_t d, std::int64_t e) {
  try {
    return to_big(checked_pow(WideInt(d), static_cast<unsigned>(e)));
  } catch (const OverflowError&) {
    return mp::pow(BigInt(d), static_cast<unsigned>(e));
  }
}

// Sum of d^e over a chunk, in 128 bits when possible.
BigInt power_sum(IndexRange r, std::int64_t e) {
  try {
    WideInt acc;
    for (std::uint64_t d = r.first; d <= r.last; ++d) acc += checked_pow(WideInt(d), static_cast<unsigned>(e));
    return to_big(acc);
  } catch (const OverflowError&) {
    BigInt acc = 0;
    for (std::uint64_t d = r.first; d <= r.last; ++d) acc += power_big(d, e);
    return acc;
  }
}

// Sum of d^e (x mod d) over a chunk.
BigInt weighted_remainder_sum(IndexRange r, std::int64_t e, std::uint64_t x) {
  try {
    WideInt acc;
    for (std::uint64_t d = r.first; d <= r.last; ++d) {
      acc += checked_pow(WideInt(d), static_cast<unsigned>(e)) * WideInt(x % d);
    }
    return to_big(acc);
  } catch (const OverflowError&) {
    BigInt acc = 0;
    for (std::uint64_t d = r.first; d <= r.last; ++d) acc += power_big(d, e) * (x % d);
    return acc;
  }
}

HighPrec weight_hp(std::uint64_t d, const Rational& alpha) {
  if (alpha.is_integer()) {
    const std::int64_t e = alpha.to_int64();
    const HighPrec mag(power_big(d, e < 0 ? -e : e));
    return e < 0 ? HighPrec(1 / mag) : mag;
  }
  return pow(HighPrec(d), alpha.to_hp());
}

Partial chunk_sum(IndexRange r, const GSumSpec& spec, Route route, bool fractions_exact) {
  Partial part;
  switch (route) {
    case Route::kFloat: {
      const long double x = std::get<long double>(spec.x);
      const BernoulliEvaluator bern(spec.j);
      for (std::uint64_t d = r.first; d <= r.last; ++d) {
        const auto dd = static_cast<long double>(d);
        const long double frac = std::fmod(x, dd) / dd;
        long double b = 1;
        if (spec.j == 1) b = frac - 0.5L;
        if (spec.j >= 2) b = bern(frac);
        part.low.add(weight_real(d, spec.alpha) * b);
      }
      break;
    }
    case Route::kIntegerPowers:
      part.first = power_sum(r, spec.alpha.to_int64());
      break;
    case Route::kReciprocals: {
      const std::int64_t e = -spec.alpha.to_int64();
      for (std::uint64_t d = r.first; d <= r.last; ++d) {
        if (fractions_exact) {
          part.fraction.add(BigInt(1), power_big(d, e));
        } else {
          part.high += 1 / HighPrec(power_big(d, e));
        }
      }
      break;
    }
    case Route::kWeightedPsi: {
      const auto x = static_cast<std::uint64_t>(std::get<std::int64_t>(spec.x));
      const std::int64_t alpha = spec.alpha.to_int64();
      part.first = weighted_remainder_sum(r, alpha - 1, x);
      part.second = power_sum(r, alpha);
      break;
    }
    case Route::kPlainPsi: {
      const auto x = static_cast<std::uint64_t>(std::get<std::int64_t>(spec.x));
      for (std::uint64_t d = r.first; d <= r.last; ++d) {
        const std::uint64_t rem = x % d;
        if (fractions_exact) {
          part.fraction.add(BigInt(rem), BigInt(d));
        } else if (rem != 0) {
          part.high += HighPrec(rem) / d;
        }
      }
      break;
    }
    case Route::kHighPrecision: {
      const auto x = static_cast<std::uint64_t>(std::get<std::int64_t>(spec.x));
      const BernoulliEvaluator bern(spec.j);
      for (std::uint64_t d = r.first; d <= r.last; ++d) {
        HighPrec b = 1;
        if (spec.j >= 1) {
          const HighPrec frac = HighPrec(x % d) / d;
          b = spec.j == 1 ? HighPrec(frac - HighPrec(0.5)) : bern(frac);
        }
        part.high += weight_hp(d, spec.alpha) * b;
      }
      break;
    }
  }
  return part;
}

}  // namespace

GValue g_range(std::uint64_t first, std::uint64_t last, const GSumSpec& spec) {
  spec.validate();
  GValue out;
  out.cutoff = g_cutoff(spec.a, spec.x);
  if (first == 0) first = 1;
  last = std::min(last, out.cutoff);
  const Route route = pick_route(spec);
  if (first > last) {
    if (route != Route::kFloat && route != Route::kHighPrecision) out.exact = Rational(0);
    return out;
  }
  const std::uint64_t count = last - first + 1;
  const bool fractions_exact = count <= kMaxExactFractionTerms;
  const auto parts = map_chunks(first, last, [&](IndexRange r) {
    return chunk_sum(r, spec, route, fractions_exact);
  });

  // Fixed left-to-right reduction over chunk order.
  Partial total;
  for (const auto& p : parts) {
    total.first += p.first;
    total.second += p.second;
    if (fractions_exact) total.fraction.add(p.fraction.value());
    total.high += p.high;
    total.low.add(p.low);
  }

  switch (route) {
    case Route::kFloat:
      out.value = HighPrec(total.low.value());
      break;
    case Route::kIntegerPowers:
      out.exact = Rational(total.first);
      break;
    case Route::kWeightedPsi:
      out.exact = Rational(2 * total.first - total.second, BigInt(2));
      break;
    case Route::kReciprocals:
      if (fractions_exact) {
        out.exact = total.fraction.value();
      } else {
        out.value = total.high;
      }
      break;
    case Route::kPlainPsi:
      if (fractions_exact) {
        out.exact = total.fraction.value() - Rational(BigInt(count), BigInt(2));
      } else {
        out.value = total.high - HighPrec(count) / 2;
      }
      break;
    case Route::kHighPrecision:
      out.value = total.high;
      break;
  }
  if (out.exact) out.value = out.exact->to_hp();
  return out;
}

GValue g_sum(const GSumSpec& spec) {
  return g_range(1, std::numeric_limits<std::uint64_t>::max(), spec);
}

GValue block_g(std::uint64_t block_start, const GSumSpec& spec) {
  if (block_start < 1) throw InvalidArgument("block start N must be >= 1");
  const std::uint64_t end = block_start > std::numeric_limits<std::uint64_t>::max() / 2
                                ? std::numeric_limits<std::uint64_t>::max()
                                : 2 * block_start;
  return g_range(block_start + 1, end, spec);
}

std::vector<std::uint64_t> dyadic_block_starts(std::uint64_t cutoff) {
  std::vector<std::uint64_t> starts;
  for (std::uint64_t n = 1; n < cutoff; n *= 2) {
    starts.push_back(n);
    if (n > std::numeric_limits<std::uint64_t>::max() / 2) break;
  }
  return starts;
}

GValue bw_block_sum(std::uint64_t block_start, const EvalPoint& x, int a, int b) {
  if (std::abs(a) + std::abs(b) > 1) throw InvalidArgument("shifts must satisfy |a| + |b| <= 1");
  const long double xv = point_value(x);
  if (!std::isfinite(xv) || xv < 1) throw InvalidArgument("x must be >= 1");
  if (block_start < 3) throw InvalidArgument("block start N must be >= 3");
  const auto n_big = static_cast<long double>(block_start);
  if (n_big * n_big > xv) throw InvalidArgument("block start N must satisfy N <= sqrt(x)");

  GValue out;
  out.cutoff = 2 * block_start;
  if (const auto* xi = std::get_if<std::int64_t>(&x)) {
    // 4x/(4n+a) + b/4 = (16x + b(4n+a)) / (4(4n+a)), numerator positive.
    const BigInt sixteen_x = BigInt(*xi) * 16;
    const bool exact = block_start <= kMaxExactFractionTerms;
    FractionAccumulator fractions;
    HighPrec high = 0;
    for (std::uint64_t n = block_start + 1; n <= 2 * block_start; ++n) {
      const BigInt shifted = BigInt(4 * n) + a;
      const BigInt num = sixteen_x + b * shifted;
      const BigInt den = 4 * shifted;
      const BigInt rem = num % den;
      if (exact) {
        fractions.add(rem, den);
      } else {
        high += HighPrec(rem) / HighPrec(den);
      }
    }
    const Rational halves(BigInt(block_start), BigInt(2));
    if (exact) {
      out.exact = fractions.value() - halves;
      out.value = out.exact->to_hp();
    } else {
      out.value = high - halves.to_hp();
    }
    return out;
  }
  CompensatedSum sum;
  for (std::uint64_t n = block_start + 1; n <= 2 * block_start; ++n) {
    const long double arg = 4 * xv / (4 * static_cast<long double>(n) + a) + b / 4.0L;
    sum.add(arg - std::floor(arg) - 0.5L);
  }
  out.value = HighPrec(sum.value());
  return out;
}

}  // namespace cwlab
