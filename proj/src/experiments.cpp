#include "cwlab/experiments.hpp"

#include <cmath>

#include "cwlab/errors.hpp"
#include "cwlab/parallel.hpp"
#include "cwlab/summatory.hpp"

namespace cwlab {

GridSpec GridSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw InvalidArgument("grid must be written x0:ratio:count");
  GridSpec g;
  try {
    g.x0 = std::stoll(std::string(text.substr(0, first)));
    g.ratio = std::stold(std::string(text.substr(first + 1, second - first - 1)));
    g.count = std::stoi(std::string(text.substr(second + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("malformed grid: " + std::string(text));
  }
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (x0 < 10) throw InvalidArgument("grid start must be >= 10");
  if (!(ratio > 1) || !std::isfinite(ratio)) throw InvalidArgument("grid ratio must exceed 1");
  if (count < 3) throw InvalidArgument("grid needs at least 3 points");
}

std::vector<std::int64_t> GridSpec::points() const {
  validate();
  std::vector<std::int64_t> out;
  const HighPrec base(x0);
  const HighPrec r(ratio);
  for (int i = 0; i < count; ++i) {
    const HighPrec v = base * pow(r, i);
    if (v > HighPrec("9.2e18")) throw InvalidArgument("grid point beyond the 64-bit range");
    const auto p = round(v).convert_to<std::int64_t>();
    if (out.empty() || p > out.back()) out.push_back(p);
  }
  return out;
}

std::vector<ResidualPoint> residual_series(const DivisorSpec& spec, const MainTermModel& model,
                                           const GridSpec& grid) {
  spec.validate();
  const auto xs = grid.points();
  // Grid points run one at a time; each summation is parallel inside.
  std::vector<ResidualPoint> out;
  out.reserve(xs.size());
  for (const std::int64_t x : xs) {
    ResidualPoint p;
    p.x = x;
    p.exact = summatory_floor_form(static_cast<std::uint64_t>(x), spec);
    p.model = model.evaluate(HighPrec(x));
    p.residual = p.exact.to_hp() - p.model;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SeriesPoint> to_fit_series(const std::vector<ResidualPoint>& series) {
  std::vector<SeriesPoint> out;
  out.reserve(series.size());
  for (const auto& p : series) out.push_back({static_cast<long double>(p.x), p.residual});
  return out;
}

namespace {

struct LineFit {
  long double slope;
  long double intercept;
};

LineFit least_squares(const std::vector<long double>& u, const std::vector<long double>& v) {
  const auto n = static_cast<long double>(u.size());
  long double mu = 0, mv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;
  long double suu = 0, suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  if (suu == 0) throw InvalidArgument("log-log fit needs at least two distinct x values");
  const long double slope = suv / suu;
  return {slope, mv - slope * mu};
}

}  // namespace

FitReport fit_loglog(const std::vector<SeriesPoint>& series) {
  FitReport report;
  std::vector<long double> u, v;
  for (const auto& p : series) {
    if (p.value == 0) {
      ++report.n_dropped_zero;
      continue;
    }
    if (!(p.x > 0)) throw InvalidArgument("log-log fit needs x > 0");
    u.push_back(std::log(p.x));
    v.push_back(log(abs(p.value)).convert_to<long double>());
  }
  report.n_points_used = u.size();
  if (u.size() < 2) {
    throw InvalidArgument("log-log fit needs at least 2 nonzero residuals, got " + std::to_string(u.size()));
  }
  const LineFit line = least_squares(u, v);
  report.slope = line.slope;
  report.intercept = line.intercept;
  for (std::size_t i = 0; i < u.size(); ++i) {
    report.max_abs_log_residual =
        std::max(report.max_abs_log_residual, std::fabs(v[i] - (line.intercept + line.slope * u[i])));
  }
  if (u.size() >= 3) {
    // Points arrive sorted by x; the last usable one is the largest.
    const std::vector<long double> u_head(u.begin(), u.end() - 1);
    const std::vector<long double> v_head(v.begin(), v.end() - 1);
    report.drop_last_delta = std::fabs(least_squares(u_head, v_head).slope - line.slope);
  }
  return report;
}

std::vector<SeriesPoint> g_series(const Rational& a, const Rational& alpha, int j, const GridSpec& grid) {
  if (j < 1) throw InvalidArgument("the slope test needs j >= 1");
  std::vector<SeriesPoint> out;
  for (const std::int64_t x : grid.points()) {
    GSumSpec spec;
    spec.a = a;
    spec.alpha = alpha;
    spec.j = j;
    spec.x = x;
    out.push_back({static_cast<long double>(x), g_sum(spec).value});
  }
  return out;
}

FitReport cw_slope_test(const Rational& a, const Rational& alpha, int j, const GridSpec& grid) {
  return fit_loglog(g_series(a, alpha, j, grid));
}

}  // namespace cwlab
