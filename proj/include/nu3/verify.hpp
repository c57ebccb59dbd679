#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nu3/binomial_sums.hpp"

namespace nu3 {

/// One checked n of a theorem sweep.
struct SweepRow {
  std::uint64_t n = 0;
  Parity parity = Parity::even;
  std::uint64_t digit_argument = 0;
  std::uint64_t predicted = 0;
  std::uint64_t exact = 0;
  bool match = false;
  std::chrono::nanoseconds elapsed{0};

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct Failure {
  std::string input;
  std::string expected;
  std::string got;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};
  /// Ranges, seed and other inputs, in insertion order.
  std::vector<std::pair<std::string, std::string>> parameters;

  bool passed() const noexcept { return failures.empty(); }
};

struct SweepOptions {
  unsigned jobs = 1;
  /// Admit n = 0, which lies outside the theorem's stated range.
  bool allow_zero = false;
};

/// One row per n in [from, to]. The exact column factors the literal S_n and
/// never consults the closed form. Throws std::invalid_argument when
/// from > to, or from == 0 without allow_zero.
std::vector<SweepRow> verify_theorem(std::uint64_t from, std::uint64_t to, const SweepOptions& options = {});

/// Summarizes a sweep as a suite report; mismatching rows become failures.
SuiteReport theorem_report(const std::vector<SweepRow>& rows, std::uint64_t from, std::uint64_t to);

SuiteReport verify_macmahon(std::uint64_t n_max, std::uint64_t xy_max, unsigned jobs = 1);
SuiteReport verify_eq1(std::uint64_t k_max, std::uint64_t exact_cutoff = 1000, unsigned jobs = 1);

/// Strict dominance, lower-bound chains, dominant-term valuation, agreement of
/// the exact and Legendre term paths, and (for n <= sum_check_max) that the
/// terms add up to S_n.
SuiteReport verify_dominance(std::uint64_t n_max, unsigned jobs = 1, std::uint64_t sum_check_max = 500);

SuiteReport verify_subadditivity(std::uint64_t trials, const Natural& magnitude, std::uint64_t seed,
                                 std::uint64_t exhaustive_m_max = 1000);
SuiteReport verify_rewriting(std::uint64_t n_max);

/// Floor-sum vs digit-form factorial valuations for n <= n_max over `primes`,
/// and both against the literally computed n! for n <= brute_max.
SuiteReport verify_legendre(std::uint64_t n_max, std::uint64_t brute_max,
                            const std::vector<std::uint64_t>& primes = {2, 3, 5, 7}, unsigned jobs = 1);

struct VerifyConfig {
  std::uint64_t theorem_from = 1;
  std::uint64_t theorem_to = 3000;
  std::uint64_t macmahon_n_max = 200;
  std::uint64_t macmahon_xy_max = 5;
  std::uint64_t eq1_k_max = 5000;
  std::uint64_t eq1_exact_cutoff = 1000;
  std::uint64_t dominance_n_max = 2000;
  std::uint64_t subadditivity_trials = 100000;
  Natural subadditivity_magnitude = Natural::pow(10, 30);
  std::uint64_t subadditivity_m_max = 1000;
  std::uint64_t rewriting_n_max = 60;
  std::uint64_t legendre_n_max = 1000000;
  std::uint64_t legendre_brute_max = 500;
  std::uint64_t seed = 20250101;
  unsigned jobs = 1;
};

/// Every suite with the configured bounds. An empty theorem range
/// (to < from) yields a zero-case report rather than an error.
std::vector<SuiteReport> run_all(const VerifyConfig& config);

}  // namespace nu3
