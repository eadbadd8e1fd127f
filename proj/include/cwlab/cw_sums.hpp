#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwlab/high_precision.hpp"
#include "cwlab/rational.hpp"

namespace cwlab {

/// Evaluation point: an integer selects exact mode (every {x/d} is an exact
/// rational), a long double selects float mode.
using EvalPoint = std::variant<std::int64_t, long double>;

EvalPoint parse_point(const std::string& text);
std::string format_point(const EvalPoint& x);
long double point_value(const EvalPoint& x);

/// Parameters of G_{a,alpha,j}(x) = sum over d <= x^{1/a} of d^alpha B_j({x/d}).
struct GSumSpec {
  Rational a = 2;
  Rational alpha = 0;
  int j = 1;
  EvalPoint x = std::int64_t{0};

  bool exact_mode() const { return std::holds_alternative<std::int64_t>(x); }
  void validate() const;
};

/// A sum evaluated to 50 digits. `exact` carries the rational value when the
/// exact path applies: integer x, integer alpha, j <= 1, and (for sums with
/// fractional terms) at most kMaxExactFractionTerms terms.
struct GValue {
  HighPrec value = 0;
  std::optional<Rational> exact;
  std::uint64_t cutoff = 0;
};

/// Longest range summed as an exact rational when the terms are genuine
/// fractions; the common denominator grows roughly like e^d.
inline constexpr std::uint64_t kMaxExactFractionTerms = 20000;

/// Largest d with d^a <= x, decided exactly for rational a.
std::uint64_t g_cutoff(const Rational& a, const EvalPoint& x);

GValue g_sum(const GSumSpec& spec);

/// Sum over first <= d <= last, clipped to the cutoff.
GValue g_range(std::uint64_t first, std::uint64_t last, const GSumSpec& spec);

/// Dyadic block over N < d <= 2N, clipped to the cutoff.
GValue block_g(std::uint64_t block_start, const GSumSpec& spec);

/// Block starts 1, 2, 4, ... below the cutoff. Together with the head term
/// d = 1 their blocks tile [1, cutoff].
std::vector<std::uint64_t> dyadic_block_starts(std::uint64_t cutoff);

/// sum over N < n <= 2N of psi(4x/(4n + a) + b/4), with |a| + |b| <= 1 and
/// 3 <= N <= sqrt(x).
GValue bw_block_sum(std::uint64_t block_start, const EvalPoint& x, int a, int b);

}  // namespace cwlab
