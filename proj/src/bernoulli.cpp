#include "cwlab/bernoulli.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

void check_degree(int j) {
  if (j < 0 || j > kMaxBernoulliDegree) {
    throw InvalidArgument("Bernoulli degree must lie in [0, " +
                          std::to_string(kMaxBernoulliDegree) + "], got " + std::to_string(j));
  }
}

struct CoefficientTable {
  std::mutex mutex;
  int filled = -1;  // highest degree available
  std::array<std::vector<Rational>, kMaxBernoulliDegree + 1> rows;
};

CoefficientTable& table() {
  static CoefficientTable t;
  return t;
}

// B_j = j * integral(B_{j-1}) + c with c fixing the mean over [0, 1] to zero.
std::vector<Rational> next_row(const std::vector<Rational>& prev, int j) {
  std::vector<Rational> row(static_cast<std::size_t>(j) + 1);
  Rational mean_without_constant = 0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    row[i + 1] = prev[i] * Rational(j) / Rational(static_cast<std::int64_t>(i + 1));
    mean_without_constant += row[i + 1] / Rational(static_cast<std::int64_t>(i + 2));
  }
  row[0] = -mean_without_constant;
  return row;
}

}  // namespace

std::span<const Rational> bernoulli_coefficients(int j) {
  check_degree(j);
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (t.filled < 0) {
    t.rows[0] = {Rational(1)};
    t.filled = 0;
  }
  while (t.filled < j) {
    t.rows[t.filled + 1] = next_row(t.rows[t.filled], t.filled + 1);
    ++t.filled;
  }
  return t.rows[j];
}

Rational bernoulli_poly(int j, const Rational& x) {
  const auto c = bernoulli_coefficients(j);
  Rational acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

double bernoulli_poly(int j, double x) {
  return static_cast<double>(bernoulli_poly(j, Rational::from_double(x)).to_long_double());
}

HighPrec bernoulli_poly(int j, const HighPrec& x) { return BernoulliEvaluator(j)(x); }

Rational psi(const Rational& x) { return x - x.floor() - Rational(1, 2); }

Rational psi(std::int64_t num, std::int64_t den) { return psi(Rational(num, den)); }

double psi(double x) { return x - std::floor(x) - 0.5; }

Rational bernoulli_func(int j, const Rational& x) {
  if (j < 1) throw InvalidArgument("Bernoulli function needs j >= 1");
  return bernoulli_poly(j, x - x.floor());
}

double bernoulli_func(int j, double x) {
  if (j < 1) throw InvalidArgument("Bernoulli function needs j >= 1");
  if (j == 1) return psi(x);
  return bernoulli_poly(j, x - std::floor(x));
}

double bernoulli_fourier_truncated(int j, double t, int terms) {
  if (j < 2) throw InvalidArgument("Fourier form needs j >= 2 (j = 1 converges only conditionally)");
  check_degree(j);
  if (terms < 1) throw InvalidArgument("truncation must be >= 1");
  const long double frac = t - std::floor(static_cast<long double>(t));
  long double series = 0;
  for (int m = terms; m >= 1; --m) {
    long double phase = static_cast<long double>(m) * frac;
    phase -= std::floor(phase);
    const long double angle = 2 * std::numbers::pi_v<long double> * phase;
    const long double wave = (j % 2 == 0) ? std::cos(angle) : std::sin(angle);
    series += wave / std::pow(static_cast<long double>(m), j);
  }
  // -j!/(2 pi i)^j times the pair sum gives (-1)^(j/2+1) 2 j!/(2 pi)^j for
  // even j and (-1)^((j+1)/2) 2 j!/(2 pi)^j for odd j.
  long double scale = 2;
  for (int i = 1; i <= j; ++i) scale *= static_cast<long double>(i) / (2 * std::numbers::pi_v<long double>);
  const int sign_exp = (j % 2 == 0) ? j / 2 + 1 : (j + 1) / 2;
  if (sign_exp % 2 != 0) scale = -scale;
  return static_cast<double>(scale * series);
}

BernoulliEvaluator::BernoulliEvaluator(int j) : j_(j) {
  for (const auto& c : bernoulli_coefficients(j)) {
    hp_.push_back(c.to_hp());
    ld_.push_back(c.to_long_double());
  }
}

HighPrec BernoulliEvaluator::operator()(const HighPrec& t) const {
  HighPrec acc = hp_.back();
  for (std::size_t i = hp_.size() - 1; i-- > 0;) acc = acc * t + hp_[i];
  return acc;
}

long double BernoulliEvaluator::operator()(long double t) const {
  long double acc = ld_.back();
  for (std::size_t i = ld_.size() - 1; i-- > 0;) acc = acc * t + ld_[i];
  return acc;
}

}  // namespace cwlab
