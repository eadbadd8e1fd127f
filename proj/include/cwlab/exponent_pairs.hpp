#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cwlab/rational.hpp"

namespace cwlab {

/// Exact exponent pair (k, l) with 0 <= k <= 1/2 <= l <= 1 and k <= l.
class ExponentPair {
 public:
  ExponentPair(Rational k, Rational l);

  /// "k,l" with rational components, e.g. "13/84,55/84".
  static ExponentPair parse(std::string_view text);

  const Rational& k() const { return k_; }
  const Rational& l() const { return l_; }
  std::string to_string() const;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

 private:
  Rational k_;
  Rational l_;
};

/// Van der Corput A process: (k/(2k+2), (k+l+1)/(2k+2)).
ExponentPair transform_A(const ExponentPair& p);
/// Van der Corput B process: (l - 1/2, k + 1/2).
ExponentPair transform_B(const ExponentPair& p);

/// Applies a word such as "BA^2" (= B after A after A; rightmost first).
/// Throws InvalidArgument on a malformed word.
ExponentPair apply_word(std::string_view word, const ExponentPair& seed);

/// Bourgain's pair (13/84, 55/84).
ExponentPair bourgain_seed();

/// c0 + c1/a, the shape of every exponent in the G_{a,alpha,j} bounds.
struct InverseAffine {
  Rational constant;
  Rational per_inverse_a;

  Rational at(const Rational& a) const;
  std::string describe() const;
};

enum class BernoulliCase { kFirst, kHigher };  // j = 1, j >= 2

/// Exponents beyond alpha/a in the bound for G_{a,alpha,j} derived from the
/// pair p: `primary` from the pair, `secondary` = 2/a - 1.
struct GBoundExponents {
  InverseAffine primary;
  InverseAffine secondary;
};

/// Throws InvalidArgument naming the failed side condition
/// (alpha(k+1) + l - k >= 0 for j = 1, alpha + l - 2k >= 0 for j >= 2).
GBoundExponents theorem4_exponents(const ExponentPair& p, BernoulliCase which,
                                   const Rational& alpha = Rational(0));

/// Closed interval of a (upper end open-ended when absent).
struct AInterval {
  Rational lower;
  std::optional<Rational> upper;
};

/// Range of a > 1 on which both exponents of the bound are <= 1/(2a), i.e.
/// where the extended conjecture's exponent is reached. Empty when none.
std::optional<AInterval> conjecture2_settled_range(const ExponentPair& p,
                                                   BernoulliCase which = BernoulliCase::kHigher);

}  // namespace cwlab
