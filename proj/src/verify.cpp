#include "nu3/verify.hpp"

#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace nu3 {

namespace {

using Clock = std::chrono::steady_clock;
using Failures = std::vector<Failure>;

const Prime kThree(3);
const Base kBase3(3);

std::string str(std::uint64_t v) { return std::to_string(v); }

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
  }

 private:
  Clock::time_point start_ = Clock::now();
};

void append(Failures& into, Failures&& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void collect(SuiteReport& report, std::vector<Failures>&& per_index) {
  for (auto& f : per_index) append(report.failures, std::move(f));
}

void expect_eq(Failures& out, const std::string& input, const std::string& expected, const std::string& got) {
  if (expected != got) out.push_back({input, expected, got});
}

void expect(Failures& out, bool ok, const std::string& input, const std::string& expected,
            const std::string& got) {
  if (!ok) out.push_back({input, expected, got});
}

}  // namespace

std::vector<SweepRow> verify_theorem(std::uint64_t from, std::uint64_t to, const SweepOptions& options) {
  if (from == 0 && !options.allow_zero) {
    throw std::invalid_argument("theorem sweep starts at n = 1 (n = 0 needs the out-of-range flag)");
  }
  if (from > to) {
    throw std::invalid_argument("empty sweep range [" + str(from) + ", " + str(to) + "]");
  }
  return detail::parallel_map<SweepRow>(to - from + 1, options.jobs, [from](std::uint64_t i) {
    const std::uint64_t n = from + i;
    Stopwatch watch;
    SweepRow row;
    row.n = n;
    row.exact = valuation(cubic_sum_direct(n), kThree).order();
    const PredictionRecord pred = predicted_valuation(Natural(n));
    row.parity = pred.parity;
    row.digit_argument = pred.digit_argument.to_u64();
    row.predicted = pred.predicted;
    row.match = row.predicted == row.exact;
    row.elapsed = watch.elapsed();
    return row;
  });
}

SuiteReport theorem_report(const std::vector<SweepRow>& rows, std::uint64_t from, std::uint64_t to) {
  SuiteReport report;
  report.name = "theorem";
  report.parameters = {{"from", str(from)}, {"to", str(to)}};
  report.cases = rows.size();
  for (const SweepRow& row : rows) {
    report.elapsed += row.elapsed;
    if (!row.match) report.failures.push_back({"n=" + str(row.n), str(row.predicted), str(row.exact)});
  }
  return report;
}

SuiteReport verify_macmahon(std::uint64_t n_max, std::uint64_t xy_max, unsigned jobs) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "macmahon";
  report.parameters = {{"n_max", str(n_max)}, {"xy_max", str(xy_max)}};
  const std::uint64_t side = xy_max + 1;
  report.cases = n_max * side * side;
  collect(report, detail::parallel_map<Failures>(n_max, jobs, [&](std::uint64_t i) {
            const std::uint64_t n = i + 1;
            Failures out;
            for (std::uint64_t x = 0; x <= xy_max; ++x) {
              for (std::uint64_t y = 0; y <= xy_max; ++y) {
                const Natural lhs = cubic_power_sum(n, x, y);
                const Natural rhs = macmahon_sum(n, x, y);
                if (lhs != rhs) {
                  out.push_back({"n=" + str(n) + ",x=" + str(x) + ",y=" + str(y), lhs.to_string(), rhs.to_string()});
                }
              }
            }
            return out;
          }));
  report.elapsed = watch.elapsed();
  return report;
}

SuiteReport verify_eq1(std::uint64_t k_max, std::uint64_t exact_cutoff, unsigned jobs) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "eq1";
  report.parameters = {{"k_max", str(k_max)}, {"exact_cutoff", str(exact_cutoff)}};
  report.cases = k_max + 1;
  collect(report, detail::parallel_map<Failures>(k_max + 1, jobs, [&](std::uint64_t k) {
            Failures out;
            const std::string input = "k=" + str(k);
            const std::uint64_t legendre = central_product_valuation(k);
            expect_eq(out, input, str(digit_sum(k, kBase3)), str(legendre));
            if (k <= exact_cutoff) {
              const Natural product = binomial(2 * k, k) * binomial(3 * k, k);
              expect_eq(out, input + " (exact product)", valuation(product, kThree).to_string(), str(legendre));
            }
            return out;
          }));
  report.elapsed = watch.elapsed();
  return report;
}

SuiteReport verify_dominance(std::uint64_t n_max, unsigned jobs, std::uint64_t sum_check_max) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "dominance";
  report.parameters = {{"n_max", str(n_max)}, {"sum_check_max", str(sum_check_max)}};
  const std::uint64_t count = n_max >= 2 ? n_max - 1 : 0;
  report.cases = count;
  collect(report, detail::parallel_map<Failures>(count, jobs, [&](std::uint64_t i) {
            const std::uint64_t n = i + 2;
            const std::uint64_t m = n / 2;
            const bool odd = n % 2 == 1;
            const std::uint64_t s3m = digit_sum(m, kBase3);
            const std::string at_n = "n=" + str(n);
            Failures out;

            const std::vector<TermRecord> terms = dominance_report(n, TermPath::exact);
            const std::vector<TermRecord> fast = dominance_report(n, TermPath::valuation_only);
            expect_eq(out, at_n + " term count", str(m + 1), str(terms.size()));
            if (terms.size() != m + 1) return out;

            const TermRecord& dom = terms[m];
            expect(out, dom.is_dominant, at_n + " r=" + str(m), "dominant", "not dominant");
            const std::uint64_t dominant_nu = dom.exact_valuation.order();
            expect_eq(out, at_n + " nu(A_m)", str(odd ? s3m + 1 : s3m), str(dominant_nu));
            expect_eq(out, at_n + " nu(A_m) vs closed form", str(predicted_valuation(n).predicted),
                      str(dominant_nu));

            const std::uint64_t chain_floor = (odd ? 2 : 1) + s3m;
            for (std::uint64_t r = 0; r <= m; ++r) {
              const TermRecord& t = terms[r];
              const std::string at = at_n + " r=" + str(r);
              expect_eq(out, at + " legendre path", t.exact_valuation.to_string(), fast[r].exact_valuation.to_string());
              if (r == m) break;
              expect(out, !t.is_dominant, at, "not dominant", "dominant");
              expect(out, dominant_nu < t.exact_valuation.order(), at + " strict dominance",
                     "> " + str(dominant_nu), t.exact_valuation.to_string());
              const std::uint64_t bound = t.lower_bound.value_or(0);
              expect(out, t.lower_bound.has_value(), at + " lower bound", "defined", "missing");
              expect(out, t.exact_valuation.order() >= bound, at + " exact >= bound", ">= " + str(bound),
                     t.exact_valuation.to_string());
              // Remaining chain: bound >= c + (m-r) + s3(r) >= c + s3(m-r) + s3(r) >= c + s3(m)
              const std::uint64_t c = odd ? 2 : 1;
              const std::uint64_t s3r = digit_sum(r, kBase3);
              const std::uint64_t line2 = c + (m - r) + s3r;
              const std::uint64_t line3 = c + digit_sum(m - r, kBase3) + s3r;
              expect(out, bound >= line2, at + " chain line 2", ">= " + str(line2), str(bound));
              expect(out, line2 >= line3, at + " chain line 3", ">= " + str(line3), str(line2));
              expect(out, line3 >= chain_floor, at + " chain line 4", ">= " + str(chain_floor), str(line3));
            }

            if (n <= sum_check_max) {
              Natural total;
              for (const TermRecord& t : terms) total += *t.value;
              const Natural direct = cubic_sum_direct(n);
              if (total != direct) out.push_back({at_n + " sum of terms", direct.to_string(), total.to_string()});
            }
            return out;
          }));
  report.elapsed = watch.elapsed();
  return report;
}

SuiteReport verify_subadditivity(std::uint64_t trials, const Natural& magnitude, std::uint64_t seed,
                                 std::uint64_t exhaustive_m_max) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "subadditivity";
  report.parameters = {{"trials", str(trials)},
                       {"magnitude", magnitude.to_string()},
                       {"seed", str(seed)},
                       {"exhaustive_m_max", str(exhaustive_m_max)}};

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const mpz_class bound = magnitude.mpz() + 1;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Natural a(rng.get_z_range(bound));
    const Natural b(rng.get_z_range(bound));
    const Natural lhs = digit_sum(a + b, kBase3);
    const Natural rhs = digit_sum(a, kBase3) + digit_sum(b, kBase3);
    if (lhs > rhs) {
      report.failures.push_back({"a=" + a.to_string() + ",b=" + b.to_string(), "<= " + rhs.to_string(), lhs.to_string()});
    }
  }
  report.cases = trials;

  for (std::uint64_t m = 0; m <= exhaustive_m_max; ++m) {
    const std::uint64_t s3m = digit_sum(m, kBase3);
    for (std::uint64_t r = 0; r <= m; ++r) {
      const std::uint64_t split = digit_sum(m - r, kBase3) + digit_sum(r, kBase3);
      if (split < s3m) report.failures.push_back({"m=" + str(m) + ",r=" + str(r), ">= " + str(s3m), str(split)});
      ++report.cases;
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

SuiteReport verify_rewriting(std::uint64_t n_max) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "rewriting";
  report.parameters = {{"n_max", str(n_max)}};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    for (std::uint64_t r = 0; r <= n / 2; ++r) {
      ++report.cases;
      if (!rewriting_check(n, r)) report.failures.push_back({"n=" + str(n) + ",r=" + str(r), "equal", "differ"});
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

SuiteReport verify_legendre(std::uint64_t n_max, std::uint64_t brute_max, const std::vector<std::uint64_t>& primes,
                            unsigned jobs) {
  Stopwatch watch;
  SuiteReport report;
  report.name = "legendre";
  std::string prime_list;
  for (std::uint64_t p : primes) prime_list += (prime_list.empty() ? "" : " ") + str(p);
  report.parameters = {{"n_max", str(n_max)}, {"brute_max", str(brute_max)}, {"primes", prime_list}};

  for (std::uint64_t pv : primes) {
    const Prime p(pv);
    constexpr std::uint64_t kBlock = 1 << 16;
    const std::uint64_t blocks = n_max / kBlock + 1;
    collect(report, detail::parallel_map<Failures>(blocks, jobs, [&](std::uint64_t b) {
              Failures out;
              const std::uint64_t hi = std::min(n_max, (b + 1) * kBlock - 1);
              for (std::uint64_t n = b * kBlock; n <= hi; ++n) {
                const std::uint64_t floor_sum = legendre_factorial_valuation(n, p);
                const std::uint64_t digits = factorial_valuation_from_digits(n, p);
                if (floor_sum != digits) out.push_back({"n=" + str(n) + ",p=" + str(pv), str(floor_sum), str(digits)});
              }
              return out;
            }));
    report.cases += n_max + 1;

    Natural factorial(1);
    for (std::uint64_t n = 0; n <= brute_max; ++n) {
      if (n > 0) factorial *= n;
      const std::string brute = valuation(factorial, p).to_string();
      const std::string input = "n=" + str(n) + ",p=" + str(pv) + " (n!)";
      expect_eq(report.failures, input, brute, legendre_factorial_valuation(Natural(n), p).to_string());
      expect_eq(report.failures, input, brute, factorial_valuation_from_digits(Natural(n), p).to_string());
      ++report.cases;
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

std::vector<SuiteReport> run_all(const VerifyConfig& config) {
  std::vector<SuiteReport> reports;
  if (config.theorem_from <= config.theorem_to) {
    SweepOptions options;
    options.jobs = config.jobs;
    options.allow_zero = config.theorem_from == 0;
    reports.push_back(theorem_report(verify_theorem(config.theorem_from, config.theorem_to, options),
                                     config.theorem_from, config.theorem_to));
  } else {
    reports.push_back(theorem_report({}, config.theorem_from, config.theorem_to));
  }
  reports.push_back(verify_macmahon(config.macmahon_n_max, config.macmahon_xy_max, config.jobs));
  reports.push_back(verify_eq1(config.eq1_k_max, config.eq1_exact_cutoff, config.jobs));
  reports.push_back(verify_dominance(config.dominance_n_max, config.jobs));
  reports.push_back(verify_subadditivity(config.subadditivity_trials, config.subadditivity_magnitude, config.seed,
                                         config.subadditivity_m_max));
  reports.push_back(verify_rewriting(config.rewriting_n_max));
  reports.push_back(verify_legendre(config.legendre_n_max, config.legendre_brute_max, {2, 3, 5, 7}, config.jobs));
  return reports;
}

}  // namespace nu3
