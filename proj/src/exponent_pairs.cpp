#include "cwlab/exponent_pairs.hpp"

#include <cctype>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));

}  // namespace

ExponentPair::ExponentPair(Rational k, Rational l) : k_(std::move(k)), l_(std::move(l)) {
  if (k_.sign() < 0 || k_ > kHalf || l_ < kHalf || l_ > Rational(1) || k_ > l_) {
    throw InvalidArgument("not an exponent pair: (" + k_.to_string() + ", " + l_.to_string() + ")");
  }
}

ExponentPair ExponentPair::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InvalidArgument("pair must be written k,l");
  return ExponentPair(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
}

std::string ExponentPair::to_string() const { return k_.to_string() + "," + l_.to_string(); }

ExponentPair transform_A(const ExponentPair& p) {
  const Rational den = 2 * p.k() + 2;
  return ExponentPair(p.k() / den, (p.k() + p.l() + 1) / den);
}

ExponentPair transform_B(const ExponentPair& p) { return ExponentPair(p.l() - kHalf, p.k() + kHalf); }

ExponentPair apply_word(std::string_view word, const ExponentPair& seed) {
  // Parse into (letter, power) factors, then apply right to left.
  struct Factor {
    char letter;
    unsigned power;
  };
  std::vector<Factor> factors;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (c != 'A' && c != 'B') {
      throw InvalidArgument("malformed transform word '" + std::string(word) + "' at position " +
                            std::to_string(i));
    }
    ++i;
    unsigned power = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      const std::size_t start = i;
      power = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
        power = power * 10 + static_cast<unsigned>(word[i] - '0');
        if (power > 1000) throw InvalidArgument("transform power too large in '" + std::string(word) + "'");
        ++i;
      }
      if (i == start) throw InvalidArgument("missing exponent after '^' in '" + std::string(word) + "'");
    }
    factors.push_back({c, power});
  }
  ExponentPair p = seed;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    for (unsigned n = 0; n < it->power; ++n) p = it->letter == 'A' ? transform_A(p) : transform_B(p);
  }
  return p;
}

ExponentPair bourgain_seed() {
  return ExponentPair(Rational(BigInt(13), BigInt(84)), Rational(BigInt(55), BigInt(84)));
}

Rational InverseAffine::at(const Rational& a) const { return constant + per_inverse_a / a; }

std::string InverseAffine::describe() const {
  return constant.to_string() + " + (" + per_inverse_a.to_string() + ")/a";
}

GBoundExponents theorem4_exponents(const ExponentPair& p, BernoulliCase which, const Rational& alpha) {
  const Rational& k = p.k();
  const Rational& l = p.l();
  GBoundExponents out;
  out.secondary = {Rational(-1), Rational(2)};
  if (which == BernoulliCase::kFirst) {
    if (alpha * (k + 1) + l - k < Rational(0)) {
      throw InvalidArgument("side condition alpha(k+1) + l - k >= 0 fails for " + p.to_string() +
                            " at alpha=" + alpha.to_string());
    }
    // (k(a-1) + l) / (a(k+1)) = k/(k+1) + (l-k)/((k+1) a)
    out.primary = {k / (k + 1), (l - k) / (k + 1)};
  } else {
    if (alpha + l - 2 * k < Rational(0)) {
      throw InvalidArgument("side condition alpha + l - 2k >= 0 fails for " + p.to_string() +
                            " at alpha=" + alpha.to_string());
    }
    // (k(a-2) + l) / a = k + (l - 2k)/a
    out.primary = {k, l - 2 * k};
  }
  return out;
}

std::optional<AInterval> conjecture2_settled_range(const ExponentPair& p, BernoulliCase which) {
  const GBoundExponents e = theorem4_exponents(p, which);
  // Condition c0 + c1 u <= u/2 with u = 1/a in (0, 1):  c0 <= (1/2 - c1) u.
  auto solve = [](const InverseAffine& f) -> std::optional<AInterval> {
    const Rational slope = kHalf - f.per_inverse_a;
    const Rational& c0 = f.constant;
    AInterval range{Rational(1), std::nullopt};
    if (slope.sign() > 0) {
      // u >= c0/slope, i.e. a <= slope/c0; no bound from above when c0 <= 0.
      if (c0.sign() > 0) range.upper = slope / c0;
      return range;
    }
    if (slope.sign() == 0) {
      if (c0.sign() <= 0) return range;
      return std::nullopt;
    }
    // slope < 0: u <= c0/slope, i.e. a >= slope/c0 when c0 < 0.
    if (c0.sign() >= 0) return std::nullopt;
    range.lower = slope / c0;
    return range;
  };
  const auto first = solve(e.primary);
  const auto second = solve(e.secondary);
  if (!first || !second) return std::nullopt;
  AInterval out{std::max(first->lower, second->lower), std::nullopt};
  if (first->upper && second->upper) {
    out.upper = std::min(*first->upper, *second->upper);
  } else if (first->upper) {
    out.upper = first->upper;
  } else {
    out.upper = second->upper;
  }
  if (out.upper && *out.upper < out.lower) return std::nullopt;
  return out;
}

}  // namespace cwlab
