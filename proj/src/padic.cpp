#include "nu3/padic.hpp"

#include <limits>
#include <stdexcept>

namespace nu3 {

namespace {

constexpr std::uint64_t kMaxU64 = std::numeric_limits<std::uint64_t>::max();

// Largest power b^k that fits in 64 bits, and its exponent k.
struct WordPower {
  std::uint64_t power;
  std::uint64_t exponent;
};

WordPower word_power(std::uint64_t b) noexcept {
  WordPower wp{b, 1};
  while (wp.power <= kMaxU64 / b) {
    wp.power *= b;
    ++wp.exponent;
  }
  return wp;
}

}  // namespace

Base::Base(std::uint64_t b) : b_(b) {
  if (b < 2) throw std::invalid_argument("digit base must be >= 2, got " + std::to_string(b));
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("valuation prime must be prime, got " + std::to_string(p));
}

std::uint64_t Valuation::order() const {
  if (!finite_) throw std::logic_error("order() of the infinite valuation");
  return order_;
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(order_) : "inf"; }

std::uint64_t digit_sum(std::uint64_t n, Base base) noexcept {
  const std::uint64_t b = base.value();
  std::uint64_t sum = 0;
  while (n != 0) {
    sum += n % b;
    n /= b;
  }
  return sum;
}

Natural digit_sum(const Natural& n, Base base) {
  if (n.fits_u64()) return digit_sum(n.to_u64(), base);
  // Peel off k base-b digits at a time; each remainder is a k-digit block
  // whose leading zeros do not change the sum.
  const WordPower chunk = word_power(base.value());
  mpz_class rest = n.mpz();
  std::uint64_t sum = 0;
  while (sgn(rest) != 0) {
    const std::uint64_t block = mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), chunk.power);
    sum += digit_sum(block, base);
  }
  return sum;
}

Valuation valuation(std::uint64_t x, Prime p) noexcept {
  if (x == 0) return Valuation::infinite();
  std::uint64_t e = 0;
  while (x % p.value() == 0) {
    x /= p.value();
    ++e;
  }
  return e;
}

Valuation valuation(const Natural& x, Prime p) {
  if (x.is_zero()) return Valuation::infinite();
  if (x.fits_u64()) return valuation(x.to_u64(), p);
  // Divide by q = p^k while it divides. At the first nonzero remainder rem,
  // nu_p(rest) = nu_p(rem) because nu_p(q * quotient) >= k > nu_p(rem).
  const WordPower chunk = word_power(p.value());
  mpz_class rest = x.mpz();
  std::uint64_t e = 0;
  for (;;) {
    const std::uint64_t rem = mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), chunk.power);
    if (rem != 0) return e + valuation(rem, p).order();
    e += chunk.exponent;
  }
}

std::uint64_t legendre_factorial_valuation(std::uint64_t n, Prime p) noexcept {
  std::uint64_t sum = 0;
  while (n != 0) {
    n /= p.value();
    sum += n;
  }
  return sum;
}

Natural legendre_factorial_valuation(const Natural& n, Prime p) {
  if (n.fits_u64()) return legendre_factorial_valuation(n.to_u64(), p);
  mpz_class q = n.mpz();
  mpz_class sum = 0;
  while (sgn(q) != 0) {
    mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p.value());
    sum += q;
  }
  return Natural(std::move(sum));
}

std::uint64_t factorial_valuation_from_digits(std::uint64_t n, Prime p) noexcept {
  return (n - digit_sum(n, p)) / (p.value() - 1);
}

Natural factorial_valuation_from_digits(const Natural& n, Prime p) {
  Natural numerator = n - digit_sum(n, p);
  return numerator.divide_exact(p.value() - 1);
}

Natural binomial(const Natural& n, const Natural& k) {
  if (k > n) return Natural(0);
  const Natural complement = n - k;
  const Natural& shorter = complement < k ? complement : k;
  const std::uint64_t steps = shorter.to_u64();
  // After step i the accumulator holds C(n - steps + i, i), always an integer.
  const Natural base = n - shorter;
  Natural acc(1);
  if (n.fits_u64()) {
    const std::uint64_t b = base.to_u64();
    for (std::uint64_t i = 1; i <= steps; ++i) {
      acc *= b + i;
      acc.divide_exact(i);
    }
  } else {
    for (std::uint64_t i = 1; i <= steps; ++i) {
      acc *= base + Natural(i);
      acc.divide_exact(i);
    }
  }
  return acc;
}

std::uint64_t central_product_valuation(std::uint64_t k) noexcept {
  const Prime three(3);
  if (k <= kMaxU64 / 3) {
    return legendre_factorial_valuation(3 * k, three) - 3 * legendre_factorial_valuation(k, three);
  }
  return central_product_valuation(Natural(k)).to_u64();
}

Natural central_product_valuation(const Natural& k) {
  const Prime three(3);
  const Natural triple = k * 3;
  return legendre_factorial_valuation(triple, three) - legendre_factorial_valuation(k, three) * 3;
}

}  // namespace nu3
