#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cwlab/asymptotics.hpp"
#include "cwlab/bernoulli.hpp"
#include "cwlab/cli.hpp"
#include "cwlab/cw_sums.hpp"
#include "cwlab/divisors.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/experiments.hpp"
#include "cwlab/exponent_pairs.hpp"
#include "cwlab/summatory.hpp"

namespace cwlab {

namespace {

// Each check throws on the first counterexample.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string bernoulli_checks() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> wide(-10, 10), unit(0, 1);
  for (int j = 1; j <= 10; ++j) {
    Rational integral = 0;
    const auto c = bernoulli_coefficients(j);
    for (std::size_t i = 0; i < c.size(); ++i) integral += c[i] / Rational(static_cast<std::int64_t>(i + 1));
    require(integral == Rational(0), "integral of B_" + std::to_string(j) + " is not zero");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = wide(rng);
    for (int j = 1; j <= 6; ++j) {
      require(std::fabs(bernoulli_func(j, x + 1) - bernoulli_func(j, x)) <= 1e-12, "periodicity");
    }
  }
  for (int j = 2; j <= 4; ++j) {
    for (int trial = 0; trial < 50; ++trial) {
      const double t = unit(rng);
      require(std::fabs(bernoulli_fourier_truncated(j, t, 10000) - bernoulli_func(j, t)) <= 1e-3,
              "Fourier truncation at j=" + std::to_string(j));
    }
  }
  return "integrals, periodicity, Fourier";
}

std::string divisor_checks() {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    require(divisor_sum_restricted(n, {2, 0}).exact() == tau_tilde_via_identity(n),
            "restricted tau identity at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> big(0, 1'000'000'000'000'000'000ULL);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint64_t n = big(rng);
    for (int a = 2; a <= 5; ++a) {
      const std::uint64_t r = integer_root(n, a);
      require(power_at_most(r, a, n) && !power_at_most(r + 1, a, n), "integer root of " + std::to_string(n));
    }
  }
  return "identity n<=1e5, roots";
}

std::string g_checks() {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> xs(0, 1'000'000);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t x = xs(rng);
    const int a = 2 + trial % 3;
    GSumSpec s{Rational(a), Rational(0), 0, x};
    require(*g_sum(s).exact == Rational(static_cast<std::int64_t>(integer_root(x, a))), "j=0 count");
    s.j = 1;
    const GValue g = g_sum(s);
    require(abs(g.value) <= HighPrec(g.cutoff) / 2, "psi bound");
    Rational blocks = *g_range(1, 1, s).exact;
    for (auto start : dyadic_block_starts(g.cutoff)) blocks += *block_g(start, s).exact;
    require(blocks == *g.exact, "dyadic reassembly");
  }
  return "counts, psi bound, dyadic blocks";
}

std::string summatory_checks() {
  for (int a = 2; a <= 4; ++a) {
    for (int alpha = 0; alpha <= 2; ++alpha) {
      const DivisorSpec spec{a, alpha};
      const BruteForceTable table(3000, spec);
      WideInt previous;
      for (std::uint64_t x = 1; x <= 3000; ++x) {
        const auto fast = summatory_fast(x, spec);
        require(fast.total.exact() == table.at(x), "fast vs brute at x=" + std::to_string(x) + " " +
                                                       spec.describe());
        require(fast.total.exact() >= previous, "monotone");
        previous = fast.total.exact();
      }
    }
  }
  return "fast = brute for x<=3000, 9 specs";
}

std::string asymptotic_checks() {
  euler_gamma();  // throws on a bad constant
  const auto model = theorem1_model(1, false);
  require(model.terms.size() == 2 && *model.terms[0].exact_coefficient == Rational(BigInt(2), BigInt(3)) &&
              *model.terms[1].exact_coefficient == Rational(BigInt(-1), BigInt(4)),
          "corollary coefficients");
  require(theta_exponent(1, false) == Rational(BigInt(1341), BigInt(1648)), "theta_1");
  require(absorption_threshold(false) == Rational(BigInt(1131), BigInt(824)), "absorption threshold");
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> xs(1, 1'000'000'000'000LL);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t x = xs(rng);
    const std::uint64_t d = integer_root(x, 2);
    const HighPrec exact = HighPrec(d) * HighPrec(d + 1) / 2;
    const HighPrec r = exact - euler_maclaurin_partial_sum(HighPrec(x), 2, 1);
    require(r >= HighPrec("-1e-15") && r <= HighPrec(0.125) + HighPrec("1e-15"), "Euler-Maclaurin window");
  }
  return "gamma, corollary, thetas, Euler-Maclaurin window";
}

std::string pair_checks() {
  const auto seed = bourgain_seed();
  require(apply_word("BA^2", seed).to_string() == "76/207,110/207", "BA^2 chain");
  require(apply_word("BA", seed).to_string() == "55/194,55/97", "BA chain");
  const auto range = conjecture2_settled_range(apply_word("BA", seed));
  require(range && range->lower == Rational(BigInt(3), BigInt(2)) && range->upper &&
              *range->upper == Rational(BigInt(97), BigInt(55)),
          "settled range");
  require(apply_word("BB", seed) == seed, "B involution");
  return "chains, settled range, involution";
}

std::string fit_checks() {
  std::vector<SeriesPoint> series;
  for (const auto x : GridSpec{10000, 2, 10}.points()) {
    series.push_back({static_cast<long double>(x), pow(HighPrec(x), HighPrec(0.75))});
  }
  require(std::fabs(fit_loglog(series).slope - 0.75L) <= 1e-9L, "synthetic slope");
  return "synthetic power law";
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> suites = {
      {"bernoulli", bernoulli_checks},     {"divisors", divisor_checks},
      {"cw_sums", g_checks},               {"summatory", summatory_checks},
      {"asymptotics", asymptotic_checks},  {"exponent_pairs", pair_checks},
      {"experiments", fit_checks},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites) {
    try {
      out.push_back({name, true, fn()});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
  return out;
}

}  // namespace cwlab
