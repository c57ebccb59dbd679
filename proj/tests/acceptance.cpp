// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every check is exact integer equality; the only numeric thresholds are the
// wall-clock budgets stated with each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "nu3/binomial_sums.hpp"
#include "nu3/verify.hpp"

namespace {

using namespace nu3;
using Clock = std::chrono::steady_clock;
using std::chrono::duration;

constexpr std::uint64_t kSeed = 20250101;

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string summarize(const SuiteReport& r) {
  std::ostringstream os;
  os << r.cases << " cases, " << r.failures.size() << " failures";
  if (!r.failures.empty()) {
    os << " (first: " << r.failures[0].input << " expected " << r.failures[0].expected << " got "
       << r.failures[0].got << ")";
  }
  return os.str();
}

Outcome within(Outcome o, Clock::duration spent, std::chrono::seconds budget) {
  const double s = duration<double>(spent).count();
  o.detail += "; " + std::to_string(s) + " s (budget " + std::to_string(budget.count()) + " s)";
  o.pass = o.pass && spent < budget;
  return o;
}

Outcome base_case() {
  std::ostringstream out, err;
  const int code = cli::run({"compute", "1", "--format", "json"}, out, err);
  const auto j = nlohmann::json::parse(out.str());
  const bool lib = cubic_sum_direct(1) == Natural(3) && valuation(cubic_sum_direct(1), Prime(3)) == Valuation(1) &&
                   predicted_valuation(Natural(1)).predicted == 1;
  const bool ok = code == 0 && lib && j["S"] == "3" && j["valuation"] == 1 && j["predicted"] == 1;
  return {ok, "compute 1 -> S=" + j["S"].get<std::string>() + " nu=" + j["valuation"].dump() +
                  " predicted=" + j["predicted"].dump()};
}

Outcome theorem_sweep() {
  SweepOptions options;
  options.jobs = workers();
  const auto t0 = Clock::now();
  const auto rows = verify_theorem(1, 3000, options);
  const auto spent = Clock::now() - t0;
  std::size_t matches = 0;
  for (const auto& r : rows) matches += r.match;
  const bool ok = rows.size() == 3000 && matches == 3000;
  return within({ok, std::to_string(matches) + "/" + std::to_string(rows.size()) + " matches with " +
                         std::to_string(options.jobs) + " workers"},
                spent, std::chrono::minutes(5));
}

Outcome macmahon() {
  const auto t0 = Clock::now();
  const SuiteReport r = verify_macmahon(200, 5, workers());
  return within({r.passed() && r.cases == 200 * 36, summarize(r)}, Clock::now() - t0, std::chrono::seconds(60));
}

Outcome eq1() {
  const SuiteReport r = verify_eq1(5000, 1000, workers());
  return {r.passed() && r.cases == 5001, summarize(r)};
}

Outcome dominance() {
  const auto t0 = Clock::now();
  const SuiteReport r = verify_dominance(2000, workers());
  return within({r.passed() && r.cases == 1999, summarize(r)}, Clock::now() - t0, std::chrono::minutes(5));
}

Outcome rewriting() {
  const SuiteReport r = verify_rewriting(60);
  return {r.passed() && r.cases > 0, summarize(r)};
}

Outcome legendre() {
  const SuiteReport r = verify_legendre(1000000, 500, {2, 3, 5, 7}, workers());
  return {r.passed() && r.cases == 4 * (1000001 + 501), summarize(r)};
}

Outcome subadditivity() {
  const SuiteReport r = verify_subadditivity(100000, Natural::pow(10, 30), kSeed, 1000);
  return {r.passed() && r.cases == 100000 + 1001 * 1002 / 2, summarize(r) + ", seed " + std::to_string(kSeed)};
}

Outcome performance() {
  const Natural n = Natural::pow(10, 18);
  Clock::duration worst{};
  std::uint64_t predicted = 0;
  for (int i = 0; i < 100; ++i) {
    const auto t0 = Clock::now();
    predicted = predicted_valuation(n).predicted;
    worst = std::max(worst, Clock::now() - t0);
  }
  std::ostringstream out, err;
  const int code = cli::run({"compute", "--predicted-only", "1000000000000000000", "--format", "json"}, out, err);
  const auto cli_ns = nlohmann::json::parse(out.str())["predict_elapsed_ns"].get<long long>();
  const auto worst_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(worst).count();
  const bool ok = code == 0 && predicted == 40 && worst < std::chrono::milliseconds(1) && cli_ns < 1000000;
  return {ok, "n=10^18 predicted=" + std::to_string(predicted) + ", worst of 100 calls " + std::to_string(worst_ns) +
                  " ns, CLI " + std::to_string(cli_ns) + " ns (budget 1000000 ns)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 base case nu_3(S_1) = 1", base_case},
      {"AC2 theorem sweep 1..3000", theorem_sweep},
      {"AC3 MacMahon identity n<=200, x,y<=5", macmahon},
      {"AC4 central product valuation = s_3(k), k<=5000", eq1},
      {"AC5 dominance and lower-bound chains n<=2000", dominance},
      {"AC6 rewriting identity n<=60", rewriting},
      {"AC7 Legendre consistency n<=10^6, brute force n<=500", legendre},
      {"AC8 digit-sum subadditivity", subadditivity},
      {"AC9 closed form at n=10^18 under 1 ms", performance},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
