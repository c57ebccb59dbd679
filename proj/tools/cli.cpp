#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "nu3/binomial_sums.hpp"
#include "nu3/report.hpp"
#include "nu3/verify.hpp"

namespace nu3::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kExactComputeLimit = 100000;
constexpr std::uint64_t kExactTermsLimit = 20000;

enum class Format { table, csv, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what) {
  try {
    return Natural::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": '" + text + "' is not a nonnegative decimal integer");
  }
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  const Natural n = parse_natural(text, what);
  if (!n.fits_u64()) throw UsageError(std::string(what) + ": " + text + " is too large here");
  return n.to_u64();
}

// Output goes to a buffer and is written in one piece, so an unwritable
// destination never leaves a partial file behind on stdout.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + out_path + "'");
}

struct Common {
  std::string format = "table";
  std::string out_path;
  std::string jobs = "0";

  Format parsed_format() const {
    if (format == "table") return Format::table;
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    throw UsageError("unknown --format '" + format + "' (table, csv, json)");
  }

  unsigned parsed_jobs() const {
    const std::uint64_t j = parse_u64(jobs, "--jobs");
    if (j == 0) return std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(j, 1024));
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs) {
  cmd->add_option("--format", c.format, "Output format: table, csv or json");
  cmd->add_option("--out", c.out_path, "Write output to PATH instead of standard output");
  if (with_jobs) cmd->add_option("--jobs", c.jobs, "Worker threads (0 = hardware concurrency)");
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
  std::string n;
  bool predicted_only = false;
  bool full = false;
  Common common;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Natural n = parse_natural(a.n, "n");
  const Format format = a.common.parsed_format();

  const auto t0 = Clock::now();
  const PredictionRecord pred = predicted_valuation(n);
  const auto predict_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();

  std::optional<Natural> sum;
  std::optional<std::uint64_t> exact;
  if (!a.predicted_only) {
    if (!n.fits_u64() || n.to_u64() > kExactComputeLimit) {
      throw UsageError("exact S_n is limited to n <= " + std::to_string(kExactComputeLimit) +
                       "; use --predicted-only for larger n");
    }
    sum = cubic_sum_direct(n.to_u64());
    exact = valuation(*sum, Prime(3)).order();
  }
  const bool match = !exact || *exact == pred.predicted;

  std::ostringstream os;
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["tool"] = "nu3";
    j["version"] = kVersion;
    j["n"] = n.to_string();
    j["parity"] = to_string(pred.parity);
    j["digit_argument"] = pred.digit_argument.to_string();
    j["predicted"] = pred.predicted;
    j["in_theorem_range"] = pred.in_theorem_range;
    j["S"] = sum ? nlohmann::ordered_json(format_integer(*sum, a.full)) : nlohmann::ordered_json(nullptr);
    j["valuation"] = exact ? nlohmann::ordered_json(*exact) : nlohmann::ordered_json(nullptr);
    j["match"] = exact ? nlohmann::ordered_json(match) : nlohmann::ordered_json(nullptr);
    j["predict_elapsed_ns"] = predict_ns;
    os << j.dump(2) << '\n';
  } else if (format == Format::csv) {
    os << "n,parity,digit_argument,predicted,S,valuation,match,in_theorem_range\n";
    os << n << ',' << to_string(pred.parity) << ',' << pred.digit_argument << ',' << pred.predicted << ','
       << (sum ? format_integer(*sum, a.full) : "") << ',' << (exact ? std::to_string(*exact) : "") << ','
       << (exact ? (match ? "true" : "false") : "") << ',' << (pred.in_theorem_range ? "true" : "false") << '\n';
  } else {
    os << "n              = " << n << '\n';
    if (sum) {
      os << "S_n            = " << format_integer(*sum, a.full) << '\n';
      os << "nu_3(S_n)      = " << *exact << '\n';
    }
    os << "predicted      = " << pred.predicted << '\n';
    os << "parity         = " << to_string(pred.parity) << '\n';
    os << "digit_argument = " << pred.digit_argument << (pred.parity == Parity::odd ? "  ((n-1)/2)" : "  (n/2)")
       << '\n';
    if (exact) os << "match          = " << (match ? "true" : "false") << '\n';
    if (!pred.in_theorem_range) os << "note           = n = 0 is outside the theorem's range n >= 1\n";
    os << "predict_ns     = " << predict_ns << '\n';
  }
  emit(os.str(), a.common.out_path, out);
  return match ? kOk : kVerificationFailure;
}

// ---- terms -----------------------------------------------------------------

struct TermsArgs {
  std::string n;
  bool full = false;
  Common common;
};

int cmd_terms(const TermsArgs& a, std::ostream& out) {
  const std::uint64_t n = parse_u64(a.n, "n");
  if (n == 0) throw UsageError("terms needs n >= 1");
  const Format format = a.common.parsed_format();
  const TermPath path = n <= kExactTermsLimit ? TermPath::exact : TermPath::valuation_only;
  const std::vector<TermRecord> terms = dominance_report(n, path);

  std::ostringstream os;
  switch (format) {
    case Format::json: os << terms_to_json(n, terms, a.full).dump(2) << '\n'; break;
    case Format::csv: write_terms_csv(os, terms, a.full); break;
    case Format::table: write_terms_table(os, n, terms, a.full); break;
  }
  emit(os.str(), a.common.out_path, out);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string from, to, n_max, xy_max, k_max, seed, trials, magnitude;
  bool timing = false;
  Common common;
};

std::string or_default(const std::string& s, std::uint64_t fallback) {
  return s.empty() ? std::to_string(fallback) : s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"theorem",       "macmahon",  "eq1",      "dominance",
                                                   "subadditivity", "rewriting", "legendre", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), a.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + a.suite +
                     "' (theorem, macmahon, eq1, dominance, subadditivity, rewriting, legendre, all)");
  }
  const Format format = a.common.parsed_format();
  const unsigned jobs = a.common.parsed_jobs();
  VerifyConfig cfg;
  cfg.jobs = jobs;
  cfg.theorem_from = parse_u64(or_default(a.from, cfg.theorem_from), "--from");
  cfg.theorem_to = parse_u64(or_default(a.to, cfg.theorem_to), "--to");
  cfg.macmahon_xy_max = parse_u64(or_default(a.xy_max, cfg.macmahon_xy_max), "--xy-max");
  cfg.eq1_k_max = parse_u64(or_default(a.k_max, cfg.eq1_k_max), "--k-max");
  cfg.seed = parse_u64(or_default(a.seed, cfg.seed), "--seed");
  cfg.subadditivity_trials = parse_u64(or_default(a.trials, cfg.subadditivity_trials), "--trials");
  if (!a.magnitude.empty()) cfg.subadditivity_magnitude = parse_natural(a.magnitude, "--magnitude");

  std::vector<SuiteReport> reports;
  if (a.suite == "all") {
    if (!a.n_max.empty()) throw UsageError("--n-max is per-suite; it does not apply to 'all'");
    reports = run_all(cfg);
  } else if (a.suite == "theorem") {
    if (cfg.theorem_from == 0) throw UsageError("--from must be >= 1");
    if (cfg.theorem_from > cfg.theorem_to) throw UsageError("empty range: --from exceeds --to");
    SweepOptions options;
    options.jobs = jobs;
    reports.push_back(theorem_report(verify_theorem(cfg.theorem_from, cfg.theorem_to, options), cfg.theorem_from,
                                     cfg.theorem_to));
  } else if (a.suite == "macmahon") {
    const std::uint64_t n_max = parse_u64(or_default(a.n_max, cfg.macmahon_n_max), "--n-max");
    if (n_max < 1) throw UsageError("--n-max must be >= 1");
    reports.push_back(verify_macmahon(n_max, cfg.macmahon_xy_max, jobs));
  } else if (a.suite == "eq1") {
    reports.push_back(verify_eq1(cfg.eq1_k_max, cfg.eq1_exact_cutoff, jobs));
  } else if (a.suite == "dominance") {
    const std::uint64_t n_max = parse_u64(or_default(a.n_max, cfg.dominance_n_max), "--n-max");
    if (n_max < 2) throw UsageError("--n-max must be >= 2");
    reports.push_back(verify_dominance(n_max, jobs));
  } else if (a.suite == "subadditivity") {
    if (cfg.subadditivity_trials < 1) throw UsageError("--trials must be >= 1");
    const std::uint64_t m_max = parse_u64(or_default(a.n_max, cfg.subadditivity_m_max), "--n-max");
    reports.push_back(
        verify_subadditivity(cfg.subadditivity_trials, cfg.subadditivity_magnitude, cfg.seed, m_max));
  } else if (a.suite == "rewriting") {
    reports.push_back(verify_rewriting(parse_u64(or_default(a.n_max, cfg.rewriting_n_max), "--n-max")));
  } else if (a.suite == "legendre") {
    const std::uint64_t n_max = parse_u64(or_default(a.n_max, cfg.legendre_n_max), "--n-max");
    reports.push_back(verify_legendre(n_max, cfg.legendre_brute_max, {2, 3, 5, 7}, jobs));
  }

  std::ostringstream os;
  switch (format) {
    case Format::json: os << reports_to_json(reports, a.timing).dump(2) << '\n'; break;
    case Format::csv: write_reports_csv(os, reports, a.timing); break;
    case Format::table: write_reports_table(os, reports); break;
  }
  emit(os.str(), a.common.out_path, out);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
  return passed ? kOk : kVerificationFailure;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string from_pos, to_pos, from_opt, to_opt;
  Common common;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const std::string& from_text = a.from_pos.empty() ? a.from_opt : a.from_pos;
  const std::string& to_text = a.to_pos.empty() ? a.to_opt : a.to_pos;
  if (from_text.empty() || to_text.empty()) throw UsageError("sweep needs FROM and TO");
  const std::uint64_t from = parse_u64(from_text, "from");
  const std::uint64_t to = parse_u64(to_text, "to");
  if (from == 0) throw UsageError("sweep starts at n >= 1");
  if (from > to) throw UsageError("empty range: from exceeds to");
  const Format format = a.common.parsed_format();

  SweepOptions options;
  options.jobs = a.common.parsed_jobs();
  const std::vector<SweepRow> rows = verify_theorem(from, to, options);

  std::ostringstream os;
  switch (format) {
    case Format::json: os << sweep_to_json(rows, from, to).dump(2) << '\n'; break;
    case Format::csv: write_sweep_csv(os, rows); break;
    case Format::table: write_sweep_table(os, rows); break;
  }
  emit(os.str(), a.common.out_path, out);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.match; });
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nu3: exact 3-adic valuations of sum_r C(n,r)^3 2^r", "nu3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute S_n, nu_3(S_n) and the closed-form prediction");
  c->add_option("n", compute.n, "n (unbounded decimal)")->required();
  c->add_flag("--predicted-only", compute.predicted_only, "Skip S_n; closed form only (any size n)");
  c->add_flag("--full-integers", compute.full, "Never elide long integers");
  add_common(c, compute.common, false);

  TermsArgs terms;
  auto* t = app.add_subcommand("terms", "List the summands A_r with valuations and lower bounds");
  t->add_option("n", terms.n, "n >= 1")->required();
  t->add_flag("--full-integers", terms.full, "Never elide long integers");
  add_common(t, terms.common, false);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", verify.suite, "theorem|macmahon|eq1|dominance|subadditivity|rewriting|legendre|all")
      ->required();
  v->add_option("--from", verify.from, "Theorem sweep start (default 1)");
  v->add_option("--to", verify.to, "Theorem sweep end (default 3000)");
  v->add_option("--n-max", verify.n_max, "Upper n for macmahon/dominance/rewriting/legendre, m for subadditivity");
  v->add_option("--xy-max", verify.xy_max, "MacMahon x, y range (default 5)");
  v->add_option("--k-max", verify.k_max, "Eq. k range (default 5000)");
  v->add_option("--seed", verify.seed, "Random seed for subadditivity");
  v->add_option("--trials", verify.trials, "Random subadditivity trials (default 100000)");
  v->add_option("--magnitude", verify.magnitude, "Upper bound for random subadditivity operands (default 10^30)");
  v->add_flag("--timing", verify.timing, "Include elapsed times in csv/json output");
  add_common(v, verify.common, true);

  SweepArgs sweep;
  sweep.common.format = "csv";
  auto* s = app.add_subcommand("sweep", "Theorem sweep rows as csv/json/table");
  s->add_option("FROM", sweep.from_pos, "First n");
  s->add_option("TO", sweep.to_pos, "Last n");
  s->add_option("--from", sweep.from_opt, "First n");
  s->add_option("--to", sweep.to_opt, "Last n");
  add_common(s, sweep.common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*t) return cmd_terms(terms, out);
    if (*v) return cmd_verify(verify, out);
    if (*s) return cmd_sweep(sweep, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace nu3::cli
