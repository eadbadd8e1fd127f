#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwlab/asymptotics.hpp"
#include "cwlab/cw_sums.hpp"
#include "cwlab/divisors.hpp"
#include "cwlab/high_precision.hpp"

namespace cwlab {

/// Geometric grid x0 * ratio^i, i < count, rounded to integers and deduplicated.
struct GridSpec {
  std::int64_t x0 = 10'000;
  long double ratio = 2;
  int count = 24;

  /// "x0:ratio:count"
  static GridSpec parse(std::string_view text);
  void validate() const;
  std::vector<std::int64_t> points() const;
};

struct ResidualPoint {
  std::int64_t x = 0;
  NumericValue exact = WideInt(0);
  HighPrec model = 0;
  HighPrec residual = 0;
};

/// exact sum minus model at every grid point, ordered by x.
std::vector<ResidualPoint> residual_series(const DivisorSpec& spec, const MainTermModel& model,
                                           const GridSpec& grid);

/// A sample for the log-log fit.
struct SeriesPoint {
  long double x;
  HighPrec value;
};

std::vector<SeriesPoint> to_fit_series(const std::vector<ResidualPoint>& series);

struct FitReport {
  long double slope = 0;
  long double intercept = 0;
  long double max_abs_log_residual = 0;
  std::size_t n_points_used = 0;
  std::size_t n_dropped_zero = 0;
  /// |slope change| when the largest usable point is removed (needs >= 3 points).
  std::optional<long double> drop_last_delta;
};

/// Slope change above which a fit is flagged as unstable.
inline constexpr long double kStabilityWarning = 0.1L;

/// Least squares of log|value| on log x. Exact zeros are dropped and counted.
/// Throws InvalidArgument with fewer than two usable points.
FitReport fit_loglog(const std::vector<SeriesPoint>& series);

/// G_{a,alpha,j}(x) on the grid (exact mode at integer points).
std::vector<SeriesPoint> g_series(const Rational& a, const Rational& alpha, int j, const GridSpec& grid);

/// Fits log|G_{a,alpha,j}(x)| against log x over the grid.
FitReport cw_slope_test(const Rational& a, const Rational& alpha, int j, const GridSpec& grid);

}  // namespace cwlab
