#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwlab/high_precision.hpp"
#include "cwlab/rational.hpp"

namespace cwlab {

/// coefficient * x^exponent, times log x when `with_log` is set.
struct ModelTerm {
  Rational exponent;
  bool with_log = false;
  HighPrec coefficient = 0;
  std::optional<Rational> exact_coefficient;
};

/// Main terms of an asymptotic formula together with its claimed error
/// exponent. Terms are kept merged and strictly decreasing in
/// (exponent, with_log).
struct MainTermModel {
  std::string name;
  std::vector<ModelTerm> terms;
  Rational theta;
  bool assumes_cw = false;

  /// Adds a term, merging it with an existing one of the same shape.
  void add(const Rational& exponent, bool with_log, const Rational& coefficient);
  void add(const Rational& exponent, bool with_log, const HighPrec& coefficient);

  HighPrec evaluate(const HighPrec& x) const;
  /// Throws InvariantBreach if ordering or finiteness is violated.
  void validate() const;
  /// e.g. "2/3*x^(3/2) - 1/4*x"; non-rational coefficients print as decimals.
  std::string describe() const;
};

struct ModelEvaluation {
  MainTermModel model;
  HighPrec value;
};

/// Model with no terms: its residual is the exact value itself.
MainTermModel zero_model();

/// Main terms of sum_{n <= x} sigma~_alpha(n) (restriction d <= sqrt(n)).
/// alpha = 0 gives x log x / 2 + (gamma - 1/2) x + sqrt(x) / 2.
MainTermModel theorem1_model(const Rational& alpha, bool cw);
ModelEvaluation main_term_theorem1(const HighPrec& x, const Rational& alpha, bool cw);

/// Main terms of sum_{n <= x} sigma_{a,alpha}(n) for integer a >= 3.
MainTermModel theorem5_model(const Rational& alpha, int a);
ModelEvaluation main_term_theorem5(const HighPrec& x, const Rational& alpha, int a);

/// Euler-Maclaurin approximation to sum_{d <= x^{1/a}} d^beta without its
/// error term; beta = -1 or beta > -1.
HighPrec euler_maclaurin_partial_sum(const HighPrec& x, const Rational& a, const Rational& beta);

/// alpha/2 + 1/4 under the Chowla-Walum conjecture, alpha/2 + 517/1648 otherwise.
Rational theta_exponent(const Rational& alpha, bool cw);

/// Smallest alpha whose theta reaches 1, where the linear term is absorbed.
Rational absorption_threshold(bool cw);

/// 1 - 2/a for alpha = 0, 1 + (alpha - 2)/a otherwise.
Rational theorem5_theta(const Rational& alpha, int a);

/// 517/1648: exponent of the Bourgain-Watt block bound.
Rational bourgain_watt_exponent();

}  // namespace cwlab
