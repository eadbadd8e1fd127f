#include "cwlab/summatory.hpp"

#include <limits>

#include "cwlab/errors.hpp"
#include "cwlab/parallel.hpp"

namespace cwlab {

namespace {

std::uint64_t lower_cofactor(std::uint64_t d, int a) {
  // d^(a-1) <= d^a <= x, so this never overflows for d within the cutoff.
  std::uint64_t k = 1;
  for (int i = 1; i < a; ++i) k *= d;
  return k;
}

void check_guard(std::uint64_t x) {
  if (x > kBruteForceLimit) {
    throw GuardExceeded("brute-force summation refuses x > " + std::to_string(kBruteForceLimit) +
                        "; use the fast path (summatory --mode fast)");
  }
}

}  // namespace

NumericValue summatory_bruteforce(std::uint64_t x, const DivisorSpec& spec) {
  spec.validate();
  check_guard(x);
  const std::uint64_t cutoff = integer_root(x, spec.a);
  if (spec.exact()) {
    WideInt total;
    for (std::uint64_t d = 1; d <= cutoff; ++d) {
      const WideInt w = weight_exact(d, spec.alpha);
      for (std::uint64_t k = lower_cofactor(d, spec.a); k <= x / d; ++k) total += w;
    }
    return total;
  }
  CompensatedSum total;
  for (std::uint64_t d = 1; d <= cutoff; ++d) {
    const long double w = weight_real(d, spec.alpha);
    for (std::uint64_t k = lower_cofactor(d, spec.a); k <= x / d; ++k) total.add(w);
  }
  return total.value();
}

BruteForceTable::BruteForceTable(std::uint64_t x_max, const DivisorSpec& spec) {
  spec.validate();
  check_guard(x_max);
  if (!spec.exact()) throw InvalidArgument("brute-force table needs an integer alpha");
  prefix_.assign(x_max + 1, 0);
  const std::uint64_t cutoff = integer_root(x_max, spec.a);
  for (std::uint64_t d = 1; d <= cutoff; ++d) {
    const std::uint64_t w = weight_exact(d, spec.alpha).to_int64();
    for (std::uint64_t k = lower_cofactor(d, spec.a); k <= x_max / d; ++k) {
      if (__builtin_add_overflow(prefix_[d * k], w, &prefix_[d * k])) {
        throw OverflowError("brute-force table entry exceeds 64 bits");
      }
    }
  }
  for (std::uint64_t n = 1; n <= x_max; ++n) {
    if (__builtin_add_overflow(prefix_[n], prefix_[n - 1], &prefix_[n])) {
      throw OverflowError("brute-force prefix sum exceeds 64 bits");
    }
  }
}

WideInt BruteForceTable::at(std::uint64_t x) const {
  if (x >= prefix_.size()) throw InvalidArgument("x beyond the brute-force table");
  return WideInt(prefix_[x]);
}

NumericValue summatory_floor_form(std::uint64_t x, const DivisorSpec& spec) {
  spec.validate();
  const std::uint64_t cutoff = integer_root(x, spec.a);
  if (spec.exact()) {
    const auto parts = map_chunks(1, cutoff, [&](IndexRange r) {
      WideInt acc;
      for (std::uint64_t d = r.first; d <= r.last; ++d) {
        const WideInt count = WideInt(x / d) - WideInt(lower_cofactor(d, spec.a)) + WideInt(1);
        acc += weight_exact(d, spec.alpha) * count;
      }
      return acc;
    });
    WideInt total;
    for (const auto& p : parts) total += p;
    return total;
  }
  const auto parts = map_chunks(1, cutoff, [&](IndexRange r) {
    CompensatedSum acc;
    for (std::uint64_t d = r.first; d <= r.last; ++d) {
      const auto count = static_cast<long double>(x / d - lower_cofactor(d, spec.a) + 1);
      acc.add(weight_real(d, spec.alpha) * count);
    }
    return acc;
  });
  CompensatedSum total;
  for (const auto& p : parts) total.add(p);
  return total.value();
}

HighPrec SummatoryBreakdown::components_sum() const {
  return term_main.value + term_power.value + term_half.value + term_psi.value;
}

std::optional<Rational> SummatoryBreakdown::components_exact() const {
  if (!term_main.exact || !term_power.exact || !term_half.exact || !term_psi.exact) return std::nullopt;
  return *term_main.exact + *term_power.exact + *term_half.exact + *term_psi.exact;
}

namespace {

GValue scaled(GValue g, const Rational& factor) {
  if (g.exact) {
    g.exact = *g.exact * factor;
    g.value = g.exact->to_hp();
  } else {
    g.value *= factor.to_hp();
  }
  return g;
}

}  // namespace

SummatoryBreakdown summatory_fast(std::uint64_t x, const DivisorSpec& spec) {
  spec.validate();
  if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw InvalidArgument("x exceeds the 64-bit signed range");
  }
  SummatoryBreakdown out;
  out.x = x;
  out.spec = spec;
  out.total = summatory_floor_form(x, spec);
  if (!spec.exact()) out.total = NumericValue(out.total.approx());

  auto g = [&](const Rational& alpha, int j) {
    GSumSpec s;
    s.a = Rational(spec.a);
    s.alpha = alpha;
    s.j = j;
    s.x = static_cast<std::int64_t>(x);
    return g_sum(s);
  };
  const Rational a(spec.a);
  out.term_main = scaled(g(spec.alpha - 1, 0), Rational(static_cast<std::int64_t>(x)));
  out.term_power = scaled(g(spec.alpha + a - 1, 0), Rational(-1));
  out.term_half = scaled(g(spec.alpha, 0), Rational(BigInt(1), BigInt(2)));
  out.term_psi = scaled(g(spec.alpha, 1), Rational(-1));

  if (const auto exact = out.components_exact()) {
    // Exact components only arise for integer alpha, where the total is exact too.
    if (*exact != Rational(out.total.exact())) {
      throw InvariantBreach("G components sum to " + exact->to_string() + " but the floor form gives " +
                            out.total.to_string() + " at x=" + std::to_string(x) + " " + spec.describe());
    }
    return out;
  }
  const HighPrec total = out.total.to_hp();
  const HighPrec scale = std::max(HighPrec(1), HighPrec(abs(total)));
  const HighPrec tolerance = spec.exact() ? HighPrec("1e-30") : HighPrec("1e-14");
  if (abs(out.components_sum() - total) > tolerance * scale) {
    throw InvariantBreach("G components sum to " + format_hp(out.components_sum()) +
                          " but the floor form gives " + out.total.to_string() + " at x=" +
                          std::to_string(x) + " " + spec.describe());
  }
  return out;
}

}  // namespace cwlab
