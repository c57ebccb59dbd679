#include "nu3/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nu3 {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no) {
  try {
    return Natural::parse(s).to_u64();
  } catch (const std::exception&) {
    throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
}

bool parse_bool(const std::string& s, std::size_t line_no) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": bad boolean '" + s + "'");
}

std::string_view yes_no(bool b) { return b ? "true" : "false"; }

std::string bound_text(const TermRecord& t) {
  return t.lower_bound ? std::to_string(*t.lower_bound) : std::string("-");
}

std::string value_text(const TermRecord& t, bool full) { return t.value ? format_integer(*t.value, full) : "-"; }

}  // namespace

std::string format_integer(const Natural& value, bool full) {
  std::string text = value.to_string();
  if (full || text.size() <= kElideDigits) return text;
  return "<" + std::to_string(text.size()) + "-digit integer>";
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    os << r.n << ',' << to_string(r.parity) << ',' << r.digit_argument << ',' << r.predicted << ',' << r.exact << ','
       << yes_no(r.match) << ',' << r.elapsed.count() << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw std::runtime_error("sweep csv: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 7) throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": expected 7 fields");
    SweepRow row;
    row.n = parse_u64(f[0], line_no);
    if (f[1] == "even") {
      row.parity = Parity::even;
    } else if (f[1] == "odd") {
      row.parity = Parity::odd;
    } else {
      throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": bad parity '" + f[1] + "'");
    }
    row.digit_argument = parse_u64(f[2], line_no);
    row.predicted = parse_u64(f[3], line_no);
    row.exact = parse_u64(f[4], line_no);
    row.match = parse_bool(f[5], line_no);
    row.elapsed = std::chrono::nanoseconds(static_cast<std::int64_t>(parse_u64(f[6], line_no)));
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_table(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << std::setw(10) << "n" << std::setw(7) << "parity" << std::setw(12) << "digit_arg" << std::setw(10)
     << "predicted" << std::setw(8) << "exact" << std::setw(7) << "match" << std::setw(14) << "elapsed_ns" << '\n';
  std::size_t mismatches = 0;
  for (const SweepRow& r : rows) {
    os << std::setw(10) << r.n << std::setw(7) << to_string(r.parity) << std::setw(12) << r.digit_argument
       << std::setw(10) << r.predicted << std::setw(8) << r.exact << std::setw(7) << yes_no(r.match) << std::setw(14)
       << r.elapsed.count() << '\n';
    if (!r.match) ++mismatches;
  }
  os << rows.size() << " rows, " << mismatches << " mismatches\n";
}

nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows, std::uint64_t from, std::uint64_t to) {
  nlohmann::ordered_json j;
  j["tool"] = "nu3";
  j["version"] = kVersion;
  j["from"] = from;
  j["to"] = to;
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"n", r.n},
                   {"parity", to_string(r.parity)},
                   {"digit_argument", r.digit_argument},
                   {"predicted", r.predicted},
                   {"exact", r.exact},
                   {"match", r.match},
                   {"elapsed_ns", r.elapsed.count()}});
    all = all && r.match;
  }
  j["all_match"] = all;
  j["rows"] = std::move(arr);
  return j;
}

void write_reports_table(std::ostream& os, const std::vector<SuiteReport>& reports) {
  for (const SuiteReport& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(14) << r.name << std::right << std::setw(10)
       << r.cases << " cases " << std::setw(6) << r.failures.size() << " failures " << std::fixed
       << std::setprecision(3) << std::chrono::duration<double>(r.elapsed).count() << " s";
    if (!r.parameters.empty()) {
      os << "  [";
      for (std::size_t i = 0; i < r.parameters.size(); ++i) {
        os << (i ? " " : "") << r.parameters[i].first << '=' << r.parameters[i].second;
      }
      os << ']';
    }
    os << '\n';
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
      const Failure& f = r.failures[i];
      os << "    " << f.input << ": expected " << f.expected << ", got " << f.got << '\n';
    }
    if (r.failures.size() > kShown) os << "    ... " << r.failures.size() - kShown << " more\n";
  }
}

void write_reports_csv(std::ostream& os, const std::vector<SuiteReport>& reports, bool include_timing) {
  os << "suite,cases,failures,passed" << (include_timing ? ",elapsed_ns" : "") << '\n';
  for (const SuiteReport& r : reports) {
    os << r.name << ',' << r.cases << ',' << r.failures.size() << ',' << yes_no(r.passed());
    if (include_timing) os << ',' << r.elapsed.count();
    os << '\n';
  }
}

nlohmann::ordered_json reports_to_json(const std::vector<SuiteReport>& reports, bool include_timing) {
  nlohmann::ordered_json j;
  j["tool"] = "nu3";
  j["version"] = kVersion;
  bool all = true;
  auto suites = nlohmann::ordered_json::array();
  for (const SuiteReport& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.name;
    s["cases"] = r.cases;
    s["failures"] = r.failures.size();
    s["passed"] = r.passed();
    if (include_timing) s["elapsed_ns"] = r.elapsed.count();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    s["parameters"] = std::move(params);
    auto fails = nlohmann::ordered_json::array();
    for (const Failure& f : r.failures) fails.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    s["failure_details"] = std::move(fails);
    suites.push_back(std::move(s));
    all = all && r.passed();
  }
  j["passed"] = all;
  j["suites"] = std::move(suites);
  return j;
}

nlohmann::ordered_json terms_to_json(std::uint64_t n, const std::vector<TermRecord>& terms, bool full) {
  nlohmann::ordered_json j;
  j["tool"] = "nu3";
  j["version"] = kVersion;
  j["n"] = n;
  auto arr = nlohmann::ordered_json::array();
  for (const TermRecord& t : terms) {
    nlohmann::ordered_json row;
    row["r"] = t.r;
    row["value"] = t.value ? nlohmann::ordered_json(format_integer(*t.value, full)) : nlohmann::ordered_json(nullptr);
    row["valuation"] = t.exact_valuation.order();
    row["lower_bound"] = t.lower_bound ? nlohmann::ordered_json(*t.lower_bound) : nlohmann::ordered_json(nullptr);
    row["dominant"] = t.is_dominant;
    arr.push_back(std::move(row));
  }
  j["terms"] = std::move(arr);
  return j;
}

void write_terms_csv(std::ostream& os, const std::vector<TermRecord>& terms, bool full) {
  os << "r,value,valuation,lower_bound,dominant\n";
  for (const TermRecord& t : terms) {
    os << t.r << ',' << value_text(t, full) << ',' << t.exact_valuation.to_string() << ',' << bound_text(t) << ','
       << yes_no(t.is_dominant) << '\n';
  }
}

void write_terms_table(std::ostream& os, std::uint64_t n, const std::vector<TermRecord>& terms, bool full) {
  os << "terms A_r of S_" << n << " (m = " << n / 2 << ")\n";
  for (const TermRecord& t : terms) {
    os << "  r=" << t.r << "  nu_3=" << t.exact_valuation.to_string() << "  bound=" << bound_text(t)
       << (t.is_dominant ? "  dominant" : "") << "  A_r=" << value_text(t, full) << '\n';
  }
}

}  // namespace nu3
