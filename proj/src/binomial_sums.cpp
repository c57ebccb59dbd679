#include "nu3/binomial_sums.hpp"

#include <stdexcept>
#include <string>

namespace nu3 {

namespace {

const Prime kThree(3);
const Base kBase3(3);

void require_half_index(std::uint64_t n, std::uint64_t r) {
  if (r > n / 2) {
    throw std::out_of_range("term index r=" + std::to_string(r) + " exceeds floor(n/2) for n=" +
                            std::to_string(n));
  }
}

Natural binom(std::uint64_t n, std::uint64_t k) { return binomial(Natural(n), Natural(k)); }

}  // namespace

std::string_view to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

Natural cubic_sum_direct(std::uint64_t n) {
  // Row C(n, r) advanced with the same running product binomial() uses.
  Natural row(1);
  Natural sum;
  for (std::uint64_t r = 0; r <= n; ++r) {
    if (r > 0) {
      row *= n - r + 1;
      row.divide_exact(r);
    }
    sum += (row * row * row) << r;
  }
  return sum;
}

Natural cubic_power_sum(std::uint64_t n, const Natural& x, const Natural& y) {
  Natural row(1);
  Natural sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      row *= n - k + 1;
      row.divide_exact(k);
    }
    sum += row * row * row * power(x, k) * power(y, n - k);
  }
  return sum;
}

Natural macmahon_sum(std::uint64_t n, const Natural& x, const Natural& y) {
  const Natural xy = x * y;
  const Natural x_plus_y = x + y;
  Natural sum;
  for (std::uint64_t k = 0; k <= n / 2; ++k) {
    sum += binom(n, 2 * k) * binom(2 * k, k) * binom(n + k, k) * power(xy, k) *
           power(x_plus_y, n - 2 * k);
  }
  return sum;
}

TermRecord summand(std::uint64_t n, std::uint64_t r) {
  require_half_index(n, r);
  TermRecord rec;
  rec.r = r;
  Natural value = binom(n + r, 3 * r) * binom(2 * r, r) * binom(3 * r, r) * Natural::pow(3, n - 2 * r);
  value <<= r;
  rec.exact_valuation = valuation(value, kThree);
  rec.value = std::move(value);
  rec.is_dominant = (r == n / 2);
  if (!rec.is_dominant) rec.lower_bound = term_lower_bound(n, r);
  return rec;
}

Valuation summand_valuation(std::uint64_t n, std::uint64_t r) {
  require_half_index(n, r);
  // C(n+r,3r) C(2r,r) C(3r,r) = (n+r)! / ((n-2r)! (r!)^3)
  const std::uint64_t core = legendre_factorial_valuation(n + r, kThree) -
                             legendre_factorial_valuation(n - 2 * r, kThree) -
                             3 * legendre_factorial_valuation(r, kThree);
  return core + (n - 2 * r);
}

bool rewriting_check(std::uint64_t n, std::uint64_t r) {
  require_half_index(n, r);
  const Natural central = binom(2 * r, r);
  return binom(n, 2 * r) * central * binom(n + r, r) == binom(n + r, 3 * r) * central * binom(3 * r, r);
}

PredictionRecord predicted_valuation(const Natural& n) {
  PredictionRecord rec;
  rec.n = n;
  rec.in_theorem_range = !n.is_zero();
  if (n.is_even()) {
    rec.parity = Parity::even;
    rec.digit_argument = n / Natural(2);
    rec.predicted = digit_sum(rec.digit_argument, kBase3).to_u64();
  } else {
    rec.parity = Parity::odd;
    rec.digit_argument = n / Natural(2);  // (n - 1) / 2
    rec.predicted = digit_sum(rec.digit_argument, kBase3).to_u64() + 1;
  }
  return rec;
}

std::uint64_t term_lower_bound(std::uint64_t n, std::uint64_t r) {
  if (r >= n / 2) {
    throw std::out_of_range("lower bound defined only for r < floor(n/2); got r=" + std::to_string(r) +
                            ", n=" + std::to_string(n));
  }
  return digit_sum(r, kBase3) + (n - 2 * r);
}

std::vector<TermRecord> dominance_report(std::uint64_t n, TermPath path) {
  const std::uint64_t m = n / 2;
  std::vector<TermRecord> out;
  out.reserve(m + 1);

  Natural term = Natural::pow(3, n);  // A_0
  for (std::uint64_t r = 0; r <= m; ++r) {
    TermRecord rec;
    rec.r = r;
    rec.is_dominant = (r == m);
    if (r < m) rec.lower_bound = term_lower_bound(n, r);
    if (path == TermPath::exact) {
      if (r > 0) {
        term *= 2 * (n + r);
        term *= (n - 2 * r + 2) * (n - 2 * r + 1);
        term.divide_exact(9);
        term.divide_exact(r);
        term.divide_exact(r);
        term.divide_exact(r);
      }
      rec.exact_valuation = valuation(term, kThree);
      rec.value = term;
    } else {
      rec.exact_valuation = summand_valuation(n, r);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace nu3
