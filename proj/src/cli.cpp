#include "cwlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwlab/asymptotics.hpp"
#include "cwlab/cw_sums.hpp"
#include "cwlab/divisors.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/experiments.hpp"
#include "cwlab/exponent_pairs.hpp"
#include "cwlab/parallel.hpp"
#include "cwlab/summatory.hpp"

namespace cwlab {

namespace {

// Column order of every subcommand's CSV output. Also printed by --help.
const std::map<std::string, std::vector<std::string>>& column_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"divisor", {"command", "n", "a", "alpha", "sigma_restricted", "tau", "is_square", "tau_tilde",
                   "sigma_alpha"}},
      {"gsum", {"command", "a", "alpha", "j", "x", "block_start", "cutoff", "value", "exact"}},
      {"bw", {"command", "n", "x", "a", "b", "value", "exact"}},
      {"summatory", {"command", "x", "a", "alpha", "mode", "fast", "brute", "term_main", "term_power",
                     "term_half", "term_psi", "terms_exact"}},
      {"asympt", {"command", "a", "alpha", "cw", "model", "terms", "theta", "absorption_threshold", "x",
                  "value", "beta", "partial_sum"}},
      {"pairs", {"command", "word", "seed_k", "seed_l", "k", "l"}},
      {"pairs --case", {"command", "word", "seed_k", "seed_l", "k", "l", "case", "alpha", "primary_const",
                        "primary_inv_a", "secondary_const", "secondary_inv_a", "a", "primary", "secondary",
                        "settled_lower", "settled_upper"}},
      {"fit", {"command", "target", "x", "exact", "model", "residual", "slope", "intercept",
               "max_abs_log_residual", "n_used", "n_dropped", "drop_last_delta"}},
      {"verify", {"command", "check", "status", "detail"}},
  };
  return table;
}

struct Cell {
  std::string text;
  bool integer = false;  // emitted as a JSON number
};

Cell text(std::string s) { return {std::move(s), false}; }
Cell integer(long long v) { return {std::to_string(v), true}; }
Cell hp(const HighPrec& v) { return {format_hp(v), false}; }

class Table {
 public:
  explicit Table(const std::string& key) : columns_(column_table().at(key)) {}

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw InvariantBreach("row width does not match the column list");
    rows_.push_back(std::move(row));
  }

  void write_csv(std::ostream& os) const {
    write_csv_line(os, [&](std::size_t i) { return columns_[i]; });
    for (const auto& row : rows_) write_csv_line(os, [&](std::size_t i) { return row[i].text; });
  }

  void write_json(std::ostream& os, const std::string& command) const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (row[i].integer) {
          obj[columns_[i]] = std::stoll(row[i].text);
        } else {
          obj[columns_[i]] = row[i].text;
        }
      }
      doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
  }

 private:
  template <class Get>
  void write_csv_line(std::ostream& os, Get get) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0) os << ',';
      const std::string v = get(i);
      if (v.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char c : v) {
          if (c == '"') os << '"';
          os << c;
        }
        os << '"';
      } else {
        os << v;
      }
    }
    os << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct Outcome {
  explicit Outcome(Table t) : table(std::move(t)) {}

  Table table;
  int exit_code = kExitOk;
  std::string error;
};

struct Options {
  std::string a;
  std::string b = "0";
  std::string alpha = "0";
  int j = 1;
  std::string x;
  std::string n;
  std::string grid = "10000:2:24";
  std::string cw = "false";
  std::string word;
  std::string seed = "13/84,55/84";
  std::string mode = "fast";
  std::string model;
  std::string target = "summatory";
  std::string beta;
  std::string which_case;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
};

std::uint64_t parse_u64(const std::string& s, const char* name) {
  if (s.empty()) throw InvalidArgument(std::string("--") + name + " is required");
  const Rational r = Rational::parse(s);
  if (!r.is_integer() || r.sign() < 0) throw InvalidArgument(std::string("--") + name + " must be a non-negative integer");
  if (r.numerator() > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument(std::string("--") + name + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r.numerator());
}

int parse_small_int(const std::string& s, const char* name) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer() || r.numerator() > 1'000'000 || r.numerator() < -1'000'000) {
    throw InvalidArgument(std::string("--") + name + " must be a small integer");
  }
  return static_cast<int>(r.numerator());
}

bool parse_flag(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw InvalidArgument("--cw expects true or false, got " + s);
}

std::string exact_or_blank(const std::optional<Rational>& r) { return r ? r->to_string() : std::string(); }

Outcome run_divisor(const Options& o) {
  const std::uint64_t n = parse_u64(o.n, "n");
  if (n == 0) throw InvalidArgument("--n must be >= 1");
  const DivisorSpec spec{parse_small_int(o.a.empty() ? "2" : o.a, "a"), Rational::parse(o.alpha)};
  Outcome r{Table("divisor")};
  r.table.add_row({text("divisor"), text(std::to_string(n)), integer(spec.a), text(spec.alpha.to_string()),
                   text(divisor_sum_restricted(n, spec).to_string()), text(tau(n).to_string()),
                   integer(is_square(n)), text(tau_tilde_via_identity(n).to_string()),
                   text(sigma_alpha(n, spec.alpha).to_string())});
  return r;
}

Outcome run_gsum(const Options& o) {
  if (o.x.empty()) throw InvalidArgument("--x is required");
  GSumSpec spec;
  spec.a = Rational::parse(o.a.empty() ? "2" : o.a);
  spec.alpha = Rational::parse(o.alpha);
  spec.j = o.j;
  spec.x = parse_point(o.x);
  GValue g;
  std::string block;
  if (!o.n.empty()) {
    const std::uint64_t start = parse_u64(o.n, "n");
    g = block_g(start, spec);
    block = std::to_string(start);
  } else {
    g = g_sum(spec);
  }
  Outcome r{Table("gsum")};
  r.table.add_row({text("gsum"), text(spec.a.to_string()), text(spec.alpha.to_string()), integer(spec.j),
                   text(format_point(spec.x)), text(block), text(std::to_string(g.cutoff)), hp(g.value),
                   text(exact_or_blank(g.exact))});
  return r;
}

Outcome run_bw(const Options& o) {
  if (o.x.empty()) throw InvalidArgument("--x is required");
  const std::uint64_t n = parse_u64(o.n, "n");
  const EvalPoint x = parse_point(o.x);
  const int a = parse_small_int(o.a.empty() ? "0" : o.a, "a");
  const int b = parse_small_int(o.b, "b");
  const GValue g = bw_block_sum(n, x, a, b);
  Outcome r{Table("bw")};
  r.table.add_row({text("bw"), text(std::to_string(n)), text(format_point(x)), integer(a), integer(b), hp(g.value),
                   text(exact_or_blank(g.exact))});
  return r;
}

bool values_agree(const NumericValue& lhs, const NumericValue& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
  const long double scale = std::max(1.0L, std::fabs(lhs.approx()));
  return std::fabs(lhs.approx() - rhs.approx()) <= 1e-12L * scale;
}

Outcome run_summatory(const Options& o) {
  const std::uint64_t x = parse_u64(o.x, "x");
  const DivisorSpec spec{parse_small_int(o.a.empty() ? "2" : o.a, "a"), Rational::parse(o.alpha)};
  spec.validate();
  if (o.mode != "fast" && o.mode != "brute" && o.mode != "both") {
    throw InvalidArgument("--mode must be fast, brute or both");
  }
  Outcome r{Table("summatory")};
  std::vector<Cell> row{text("summatory"), text(std::to_string(x)), integer(spec.a), text(spec.alpha.to_string()),
                        text(o.mode)};
  std::optional<NumericValue> fast, brute;
  SummatoryBreakdown breakdown;
  if (o.mode != "brute") {
    breakdown = summatory_fast(x, spec);
    fast = breakdown.total;
  }
  if (o.mode != "fast") brute = summatory_bruteforce(x, spec);
  row.push_back(text(fast ? fast->to_string() : ""));
  row.push_back(text(brute ? brute->to_string() : ""));
  if (fast) {
    row.push_back(hp(breakdown.term_main.value));
    row.push_back(hp(breakdown.term_power.value));
    row.push_back(hp(breakdown.term_half.value));
    row.push_back(hp(breakdown.term_psi.value));
    row.push_back(text(breakdown.components_exact() ? "yes" : "no"));
  } else {
    for (int i = 0; i < 5; ++i) row.push_back(text(""));
  }
  r.table.add_row(std::move(row));
  if (fast && brute && !values_agree(*fast, *brute)) {
    r.exit_code = kExitInvariantBreach;
    r.error = "fast total " + fast->to_string() + " differs from brute-force " + brute->to_string();
  }
  return r;
}

Outcome run_asympt(const Options& o) {
  const int a = parse_small_int(o.a.empty() ? "2" : o.a, "a");
  const Rational alpha = Rational::parse(o.alpha);
  const bool cw = parse_flag(o.cw);
  if (a < 2) throw InvalidArgument("--a must be >= 2");
  const MainTermModel model = a == 2 ? theorem1_model(alpha, cw) : theorem5_model(alpha, a);
  std::string x_text, value, partial;
  HighPrec x = 0;
  if (!o.x.empty()) {
    x = Rational::parse(o.x).to_hp();
    x_text = o.x;
    if (x < 2) throw InvalidArgument("--x must be >= 2 for model evaluation");
    value = format_hp(model.evaluate(x));
  }
  if (!o.beta.empty()) {
    if (o.x.empty()) throw InvalidArgument("--beta needs --x");
    partial = format_hp(euler_maclaurin_partial_sum(x, Rational(a), Rational::parse(o.beta)));
  }
  Outcome r{Table("asympt")};
  r.table.add_row({text("asympt"), integer(a), text(alpha.to_string()), text(cw ? "true" : "false"), text(model.name),
                   text(model.describe()), text(model.theta.to_string()),
                   text(a == 2 ? absorption_threshold(cw).to_string() : ""), text(x_text), text(value),
                   text(o.beta), text(partial)});
  return r;
}

Outcome run_pairs(const Options& o) {
  const ExponentPair seed = ExponentPair::parse(o.seed);
  const ExponentPair image = apply_word(o.word, seed);
  std::vector<Cell> row{text("pairs"), text(o.word), text(seed.k().to_string()), text(seed.l().to_string()),
                        text(image.k().to_string()), text(image.l().to_string())};
  if (o.which_case.empty()) {
    Outcome r{Table("pairs")};
    r.table.add_row(std::move(row));
    return r;
  }
  if (o.which_case != "1" && o.which_case != "2") throw InvalidArgument("--case must be 1 (j=1) or 2 (j>=2)");
  const BernoulliCase which = o.which_case == "1" ? BernoulliCase::kFirst : BernoulliCase::kHigher;
  const Rational alpha = Rational::parse(o.alpha);
  const GBoundExponents e = theorem4_exponents(image, which, alpha);
  row.push_back(text(o.which_case));
  row.push_back(text(alpha.to_string()));
  row.push_back(text(e.primary.constant.to_string()));
  row.push_back(text(e.primary.per_inverse_a.to_string()));
  row.push_back(text(e.secondary.constant.to_string()));
  row.push_back(text(e.secondary.per_inverse_a.to_string()));
  if (!o.a.empty()) {
    const Rational a = Rational::parse(o.a);
    if (a <= Rational(1)) throw InvalidArgument("--a must exceed 1");
    row.push_back(text(a.to_string()));
    row.push_back(text(e.primary.at(a).to_string()));
    row.push_back(text(e.secondary.at(a).to_string()));
  } else {
    for (int i = 0; i < 3; ++i) row.push_back(text(""));
  }
  const auto range = conjecture2_settled_range(image, which);
  row.push_back(text(range ? range->lower.to_string() : "empty"));
  row.push_back(text(range ? (range->upper ? range->upper->to_string() : "inf") : "empty"));
  Outcome r{Table("pairs --case")};
  r.table.add_row(std::move(row));
  return r;
}

std::string format_delta(const std::optional<long double>& d) {
  return d ? format_hp(HighPrec(*d), 10) : std::string();
}

Outcome run_fit(const Options& o) {
  const GridSpec grid = GridSpec::parse(o.grid);
  Outcome r{Table("fit")};
  if (o.target == "gsum") {
    const Rational a = Rational::parse(o.a.empty() ? "2" : o.a);
    const Rational alpha = Rational::parse(o.alpha);
    const auto series = g_series(a, alpha, o.j, grid);
    const FitReport fit = fit_loglog(series);
    for (const auto& p : series) {
      r.table.add_row({text("fit"), text("gsum"), text(std::to_string(static_cast<long long>(p.x))), hp(p.value),
                       hp(0), hp(p.value), hp(HighPrec(fit.slope)), hp(HighPrec(fit.intercept)),
                       hp(HighPrec(fit.max_abs_log_residual)), integer(static_cast<long long>(fit.n_points_used)),
                       integer(static_cast<long long>(fit.n_dropped_zero)), text(format_delta(fit.drop_last_delta))});
    }
    return r;
  }
  if (o.target != "summatory") throw InvalidArgument("--target must be summatory or gsum");
  const DivisorSpec spec{parse_small_int(o.a.empty() ? "2" : o.a, "a"), Rational::parse(o.alpha)};
  spec.validate();
  const std::string model_name = o.model.empty() ? (spec.a == 2 ? "theorem1" : "theorem5") : o.model;
  MainTermModel model;
  if (model_name == "theorem1") {
    if (spec.a != 2) throw InvalidArgument("the theorem1 model needs --a 2");
    model = theorem1_model(spec.alpha, parse_flag(o.cw));
  } else if (model_name == "theorem5") {
    model = theorem5_model(spec.alpha, spec.a);
  } else if (model_name == "zero") {
    model = zero_model();
  } else {
    throw InvalidArgument("--model must be theorem1, theorem5 or zero");
  }
  const auto series = residual_series(spec, model, grid);
  const FitReport fit = fit_loglog(to_fit_series(series));
  for (const auto& p : series) {
    r.table.add_row({text("fit"), text("summatory"), text(std::to_string(p.x)), text(p.exact.to_string()),
                     hp(p.model), hp(p.residual), hp(HighPrec(fit.slope)), hp(HighPrec(fit.intercept)),
                     hp(HighPrec(fit.max_abs_log_residual)), integer(static_cast<long long>(fit.n_points_used)),
                     integer(static_cast<long long>(fit.n_dropped_zero)), text(format_delta(fit.drop_last_delta))});
  }
  return r;
}

Outcome run_verify() {
  Outcome r{Table("verify")};
  bool all = true;
  for (const auto& c : run_verification_suite()) {
    all = all && c.passed;
    r.table.add_row({text("verify"), text(c.name), text(c.passed ? "pass" : "FAIL"), text(c.detail)});
  }
  if (!all) {
    r.exit_code = kExitInvariantBreach;
    r.error = "one or more invariant suites failed";
  }
  return r;
}

std::string help_footer() {
  std::ostringstream os;
  os << "\nCSV columns (stable order; JSON uses the same keys):\n";
  for (const auto& [name, cols] : column_table()) {
    os << "  " << name << ": ";
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
  }
  os << "\nExit codes: 0 success, 2 invalid input, 3 internal invariant breach.\n"
        "Rationals print as p/q; high-precision reals carry 30 significant digits.\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted divisor sums, Chowla-Walum sums and exponent-pair calculator", "cwlab"};
  app.footer(help_footer());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "write results to PATH instead of stdout");
  app.add_option("--threads", o.threads, "worker threads (default: CWLAB_THREADS or all cores)");

  auto* divisor = app.add_subcommand("divisor", "per-n divisor functions");
  divisor->add_option("--n", o.n, "n >= 1")->required();
  divisor->add_option("--a", o.a, "restriction root (integer >= 2, default 2)");
  divisor->add_option("--alpha", o.alpha, "weight exponent >= 0");

  auto* gsum = app.add_subcommand("gsum", "Chowla-Walum sum G_{a,alpha,j}(x), or one dyadic block with --n");
  gsum->add_option("--a", o.a, "restriction root > 1, rational (default 2)");
  gsum->add_option("--alpha", o.alpha, "weight exponent");
  gsum->add_option("--j", o.j, "Bernoulli index >= 0");
  gsum->add_option("--x", o.x, "evaluation point; integers select exact mode")->required();
  gsum->add_option("--n", o.n, "dyadic block start N (sum over N < d <= 2N)");

  auto* bw = app.add_subcommand("bw", "sum over N < n <= 2N of psi(4x/(4n+a) + b/4)");
  bw->add_option("--n", o.n, "block start N >= 3")->required();
  bw->add_option("--x", o.x, "x >= N^2")->required();
  bw->add_option("--a", o.a, "shift a (default 0)");
  bw->add_option("--b", o.b, "shift b (default 0), |a| + |b| <= 1");

  auto* summatory = app.add_subcommand("summatory", "sum_{n <= x} sigma_{a,alpha}(n)");
  summatory->add_option("--x", o.x, "x >= 0")->required();
  summatory->add_option("--a", o.a, "restriction root (integer >= 2, default 2)");
  summatory->add_option("--alpha", o.alpha, "weight exponent >= 0");
  summatory->add_option("--mode", o.mode, "fast, brute or both");

  auto* asympt = app.add_subcommand("asympt", "main-term models, error exponents, Euler-Maclaurin sums");
  asympt->add_option("--a", o.a, "2 for the square-root restriction, integer >= 3 otherwise");
  asympt->add_option("--alpha", o.alpha, "weight exponent >= 0");
  asympt->add_option("--cw", o.cw, "assume the Chowla-Walum conjecture (true|false)");
  asympt->add_option("--x", o.x, "evaluate the model at x");
  asympt->add_option("--beta", o.beta, "also evaluate the Euler-Maclaurin sum of d^beta, d <= x^{1/a}");

  auto* pairs = app.add_subcommand("pairs", "exponent-pair transforms and derived exponents");
  pairs->add_option("--word", o.word, "transform word such as BA^2 (rightmost applied first)");
  pairs->add_option("--seed", o.seed, "seed pair k,l (default 13/84,55/84)");
  pairs->add_option("--case", o.which_case, "1 for j = 1, 2 for j >= 2: add bound exponents and settled range");
  pairs->add_option("--alpha", o.alpha, "alpha for the side condition (default 0)");
  pairs->add_option("--a", o.a, "evaluate the exponents at this a");

  auto* fit = app.add_subcommand("fit", "residual series over a grid and its log-log slope");
  fit->add_option("--target", o.target, "summatory (default) or gsum");
  fit->add_option("--a", o.a, "restriction root");
  fit->add_option("--alpha", o.alpha, "weight exponent");
  fit->add_option("--j", o.j, "Bernoulli index for --target gsum");
  fit->add_option("--grid", o.grid, "x0:ratio:count (default 10000:2:24)");
  fit->add_option("--model", o.model, "theorem1, theorem5 or zero");
  fit->add_option("--cw", o.cw, "theta under the Chowla-Walum conjecture (true|false)");

  auto* verify = app.add_subcommand("verify", "run every invariant suite at reduced scale");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  if (o.threads > 0) set_thread_count(o.threads);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome result = [&] {
      if (*divisor) return run_divisor(o);
      if (*gsum) return run_gsum(o);
      if (*bw) return run_bw(o);
      if (*summatory) return run_summatory(o);
      if (*asympt) return run_asympt(o);
      if (*pairs) return run_pairs(o);
      if (*fit) return run_fit(o);
      if (*verify) return run_verify();
      throw InvalidArgument("unknown command");
    }();
    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw InvalidArgument("cannot open --out " + o.out);
    }
    std::ostream& sink = o.out.empty() ? out : file;
    if (o.format == "json") {
      result.table.write_json(sink, command);
    } else {
      result.table.write_csv(sink);
    }
    if (result.exit_code != kExitOk) err << "error: " << result.error << '\n';
    return result.exit_code;
  } catch (const InvariantBreach& e) {
    err << "error: invariant breach: " << e.what() << '\n';
    return kExitInvariantBreach;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace cwlab
