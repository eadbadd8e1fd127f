#include "cwlab/asymptotics.hpp"

#include <algorithm>
#include <sstream>

#include "cwlab/divisors.hpp"
#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));

bool shape_before(const ModelTerm& lhs, const ModelTerm& rhs) {
  if (lhs.exponent != rhs.exponent) return lhs.exponent > rhs.exponent;
  return lhs.with_log && !rhs.with_log;
}

// {x^{1/a}}, exact for perfect powers when x is an integer and a is integral.
HighPrec root_fraction(const HighPrec& x, const Rational& a, HighPrec& root) {
  if (a.is_integer() && x == floor(x) && x < HighPrec("1.8e19")) {
    const auto n = x.convert_to<std::uint64_t>();
    const auto k = static_cast<int>(a.to_int64());
    const std::uint64_t r = integer_root(n, k);
    if (power_at_most(r, k, n) && !power_at_most(r, k, n - 1)) {
      root = HighPrec(r);
      return 0;
    }
    root = pow(x, 1 / a.to_hp());
    HighPrec frac = root - HighPrec(r);
    return frac;
  }
  root = pow(x, 1 / a.to_hp());
  return root - floor(root);
}

}  // namespace

void MainTermModel::add(const Rational& exponent, bool with_log, const Rational& coefficient) {
  for (auto& t : terms) {
    if (t.exponent == exponent && t.with_log == with_log) {
      if (t.exact_coefficient) {
        t.exact_coefficient = *t.exact_coefficient + coefficient;
        t.coefficient = t.exact_coefficient->to_hp();
      } else {
        t.coefficient += coefficient.to_hp();
      }
      return;
    }
  }
  terms.push_back({exponent, with_log, coefficient.to_hp(), coefficient});
  std::sort(terms.begin(), terms.end(), shape_before);
}

void MainTermModel::add(const Rational& exponent, bool with_log, const HighPrec& coefficient) {
  for (auto& t : terms) {
    if (t.exponent == exponent && t.with_log == with_log) {
      t.coefficient += coefficient;
      t.exact_coefficient.reset();
      return;
    }
  }
  terms.push_back({exponent, with_log, coefficient, std::nullopt});
  std::sort(terms.begin(), terms.end(), shape_before);
}

HighPrec MainTermModel::evaluate(const HighPrec& x) const {
  if (terms.empty()) return 0;
  if (x <= 0) throw InvalidArgument("models are evaluated at x > 0");
  const HighPrec log_x = log(x);
  HighPrec total = 0;
  for (const auto& t : terms) {
    HighPrec v = t.coefficient * exp(t.exponent.to_hp() * log_x);
    if (t.with_log) v *= log_x;
    total += v;
  }
  return total;
}

void MainTermModel::validate() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!boost::multiprecision::isfinite(terms[i].coefficient)) {
      throw InvariantBreach(name + ": non-finite coefficient");
    }
    if (i > 0 && !shape_before(terms[i - 1], terms[i])) {
      throw InvariantBreach(name + ": terms are not strictly decreasing");
    }
  }
}

std::string MainTermModel::describe() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::string coeff = t.exact_coefficient ? t.exact_coefficient->to_string() : format_hp(t.coefficient, 12);
    if (i > 0) {
      const bool negative = coeff.front() == '-';
      os << (negative ? " - " : " + ");
      if (negative) coeff.erase(0, 1);
    }
    os << coeff << "*x";
    if (t.exponent != Rational(1)) os << "^(" << t.exponent << ")";
    if (t.with_log) os << "*log(x)";
  }
  return os.str();
}

MainTermModel zero_model() {
  MainTermModel m;
  m.name = "zero";
  return m;
}

Rational bourgain_watt_exponent() { return Rational(BigInt(517), BigInt(1648)); }

Rational theta_exponent(const Rational& alpha, bool cw) {
  if (alpha.sign() < 0) throw InvalidArgument("alpha must be >= 0");
  return alpha * kHalf + (cw ? Rational(BigInt(1), BigInt(4)) : bourgain_watt_exponent());
}

Rational absorption_threshold(bool cw) {
  const Rational offset = cw ? Rational(BigInt(1), BigInt(4)) : bourgain_watt_exponent();
  return 2 * (Rational(1) - offset);
}

Rational theorem5_theta(const Rational& alpha, int a) {
  if (a < 3) throw InvalidArgument("a must be an integer >= 3, got " + std::to_string(a));
  if (alpha.sign() < 0) throw InvalidArgument("alpha must be >= 0");
  if (alpha.sign() == 0) return Rational(1) - Rational(BigInt(2), BigInt(a));
  return Rational(1) + (alpha - 2) / Rational(a);
}

MainTermModel theorem1_model(const Rational& alpha, bool cw) {
  if (alpha.sign() < 0) throw InvalidArgument("alpha must be >= 0, got " + alpha.to_string());
  MainTermModel m;
  m.theta = theta_exponent(alpha, cw);
  m.assumes_cw = cw;
  if (alpha.sign() == 0) {
    m.name = "restricted-tau (a=2)";
    m.add(Rational(1), true, kHalf);
    m.add(Rational(1), false, HighPrec(euler_gamma() - HighPrec(0.5)));
    m.add(kHalf, false, kHalf);
  } else {
    m.name = "restricted-sigma (a=2, alpha=" + alpha.to_string() + ")";
    m.add(1 + alpha * kHalf, false, Rational(2) / (alpha * (alpha + 2)));
    m.add((alpha + 1) * kHalf, false, Rational(1) / (2 * (alpha + 1)));
    m.add(Rational(1), false,
          Rational(BigInt(5), BigInt(8)) - alpha / Rational(8) - Rational(1) / alpha);
  }
  m.validate();
  return m;
}

ModelEvaluation main_term_theorem1(const HighPrec& x, const Rational& alpha, bool cw) {
  if (x < 2) throw InvalidArgument("main terms are evaluated at x >= 2");
  auto m = theorem1_model(alpha, cw);
  const HighPrec v = m.evaluate(x);
  return {std::move(m), v};
}

MainTermModel theorem5_model(const Rational& alpha, int a) {
  MainTermModel m;
  m.theta = theorem5_theta(alpha, a);
  const Rational ar(a);
  if (alpha.sign() == 0) {
    m.name = "restricted-tau (a=" + std::to_string(a) + ")";
    m.add(Rational(1), true, Rational(1) / ar);
    m.add(Rational(1), false, HighPrec(euler_gamma() - (Rational(1) / ar).to_hp()));
  } else {
    m.name = "restricted-sigma (a=" + std::to_string(a) + ", alpha=" + alpha.to_string() + ")";
    m.add(1 + alpha / ar, false, ar / (alpha * (alpha + ar)));
    m.add(Rational(1), false,
          Rational(BigInt(5), BigInt(8)) - alpha / Rational(8) - Rational(1) / alpha);
  }
  m.validate();
  return m;
}

ModelEvaluation main_term_theorem5(const HighPrec& x, const Rational& alpha, int a) {
  if (x < 2) throw InvalidArgument("main terms are evaluated at x >= 2");
  auto m = theorem5_model(alpha, a);
  const HighPrec v = m.evaluate(x);
  return {std::move(m), v};
}

HighPrec euler_maclaurin_partial_sum(const HighPrec& x, const Rational& a, const Rational& beta) {
  if (x < 1) throw InvalidArgument("x must be >= 1");
  if (a < Rational(1)) throw InvalidArgument("a must be >= 1");
  if (beta < Rational(-1)) throw InvalidArgument("beta must be -1 or exceed -1, got " + beta.to_string());
  HighPrec root;
  const HighPrec saw = root_fraction(x, a, root) - HighPrec(0.5);
  const HighPrec inv_a = 1 / a.to_hp();
  if (beta == Rational(-1)) {
    return inv_a * log(x) + euler_gamma() - saw / root;
  }
  const HighPrec b = beta.to_hp();
  const Rational constant = kHalf - beta / Rational(8) - Rational(1) / (beta + 1);
  return pow(x, (b + 1) * inv_a) / (b + 1) - saw * pow(x, b * inv_a) + constant.to_hp();
}

}  // namespace cwlab
