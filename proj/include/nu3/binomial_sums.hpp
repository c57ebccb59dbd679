#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nu3/natural.hpp"
#include "nu3/padic.hpp"

namespace nu3 {

enum class Parity { even, odd };

std::string_view to_string(Parity p) noexcept;

/// One summand A_r = C(n+r,3r) C(2r,r) C(3r,r) 2^r 3^(n-2r) of the
/// transformed cubic sum, 0 <= r <= floor(n/2).
struct TermRecord {
  std::uint64_t r = 0;
  /// Exact A_r; empty when produced by the valuation-only path.
  std::optional<Natural> value;
  Valuation exact_valuation = Valuation::infinite();
  /// First line of the lower-bound chain, s_3(r) + (n - 2r); only for r < m.
  std::optional<std::uint64_t> lower_bound;
  bool is_dominant = false;
};

/// Closed-form nu_3(S_n): s_3((n-1)/2) + 1 for odd n, s_3(n/2) for even n.
struct PredictionRecord {
  Natural n;
  Parity parity = Parity::even;
  Natural digit_argument;
  std::uint64_t predicted = 0;
  /// False for n = 0, which the closed form covers but the theorem does not.
  bool in_theorem_range = true;
};

/// S_n = sum_{r=0}^{n} C(n,r)^3 2^r, summed term by term.
Natural cubic_sum_direct(std::uint64_t n);

/// Left side of MacMahon's identity: sum_k C(n,k)^3 x^k y^(n-k).
Natural cubic_power_sum(std::uint64_t n, const Natural& x, const Natural& y);

/// Right side of MacMahon's identity:
/// sum_{k<=n/2} C(n,2k) C(2k,k) C(n+k,k) x^k y^k (x+y)^(n-2k).
Natural macmahon_sum(std::uint64_t n, const Natural& x, const Natural& y);

/// A_r built directly from binomial(); throws std::out_of_range if r > n/2.
TermRecord summand(std::uint64_t n, std::uint64_t r);

/// nu_3(A_r) from Legendre floor sums, without forming A_r:
/// nu_3((n+r)!) - nu_3((n-2r)!) - 3 nu_3(r!) + (n - 2r).
Valuation summand_valuation(std::uint64_t n, std::uint64_t r);

/// C(n,2r)C(2r,r)C(n+r,r) == C(n+r,3r)C(2r,r)C(3r,r); throws std::out_of_range if r > n/2.
bool rewriting_check(std::uint64_t n, std::uint64_t r);

/// O(log n) closed form; never touches S_n.
PredictionRecord predicted_valuation(const Natural& n);

/// s_3(r) + (n - 2r) for 0 <= r < floor(n/2); throws std::out_of_range otherwise.
std::uint64_t term_lower_bound(std::uint64_t n, std::uint64_t r);

enum class TermPath {
  exact,           ///< form every A_r and factor it
  valuation_only,  ///< Legendre valuations only, no big integers
};

/// All floor(n/2)+1 term records of S_n with the dominant r = floor(n/2)
/// marked. The exact path generates A_r incrementally from
/// A_r / A_{r-1} = 2 (n+r)(n-2r+2)(n-2r+1) / (9 r^3).
std::vector<TermRecord> dominance_report(std::uint64_t n, TermPath path = TermPath::exact);

}  // namespace nu3
