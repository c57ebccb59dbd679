#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nu3/binomial_sums.hpp"
#include "nu3/verify.hpp"

namespace nu3 {

inline constexpr std::string_view kVersion = "1.0.0";

/// Fixed sweep CSV header; column order is part of the file format.
inline constexpr std::string_view kSweepCsvHeader = "n,parity,digit_argument,predicted,exact,match,elapsed_ns";

/// Integers longer than this many decimal digits print as "<D-digit integer>".
inline constexpr std::size_t kElideDigits = 10000;

std::string format_integer(const Natural& value, bool full);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
/// Inverse of write_sweep_csv. Throws std::runtime_error on a bad header or row.
std::vector<SweepRow> read_sweep_csv(std::istream& is);
void write_sweep_table(std::ostream& os, const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows, std::uint64_t from, std::uint64_t to);

/// Suite summaries. Machine-readable forms omit timings unless asked, so a
/// rerun with the same config and seed reproduces them byte for byte.
void write_reports_table(std::ostream& os, const std::vector<SuiteReport>& reports);
void write_reports_csv(std::ostream& os, const std::vector<SuiteReport>& reports, bool include_timing = false);
nlohmann::ordered_json reports_to_json(const std::vector<SuiteReport>& reports, bool include_timing = false);

nlohmann::ordered_json terms_to_json(std::uint64_t n, const std::vector<TermRecord>& terms, bool full);
void write_terms_csv(std::ostream& os, const std::vector<TermRecord>& terms, bool full);
void write_terms_table(std::ostream& os, std::uint64_t n, const std::vector<TermRecord>& terms, bool full);

}  // namespace nu3
