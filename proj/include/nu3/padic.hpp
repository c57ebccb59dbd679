#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "nu3/natural.hpp"

namespace nu3 {

/// Digit base, b >= 2.
class Base {
 public:
  explicit Base(std::uint64_t b);
  std::uint64_t value() const noexcept { return b_; }

 private:
  std::uint64_t b_;
};

/// A prime usable as a valuation prime. Construction rejects composites.
class Prime {
 public:
  explicit Prime(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  operator Base() const { return Base(p_); }  // NOLINT(google-explicit-constructor)

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// p-adic order of an integer. The valuation of zero is the only non-finite
/// value and compares greater than every finite order.
class Valuation {
 public:
  constexpr Valuation(std::uint64_t order) noexcept : finite_(true), order_(order) {}  // NOLINT
  static constexpr Valuation infinite() noexcept { return Valuation(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Throws std::logic_error for the infinite valuation.
  std::uint64_t order() const;

  std::string to_string() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.order_ <=> b.order_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) noexcept {
    return (a.finite_ && b.finite_) ? Valuation(a.order_ + b.order_) : infinite();
  }

 private:
  constexpr Valuation() noexcept : finite_(false), order_(0) {}
  bool finite_;
  std::uint64_t order_;
};

/// s_b(n): sum of the base-b digits of n. s_b(n) ≡ n (mod b-1).
Natural digit_sum(const Natural& n, Base base);
std::uint64_t digit_sum(std::uint64_t n, Base base) noexcept;

/// Largest e with p^e | x; infinite for x = 0.
Valuation valuation(const Natural& x, Prime p);
Valuation valuation(std::uint64_t x, Prime p) noexcept;

/// nu_p(n!) as the floor sum  sum_{i>=1} floor(n / p^i).
Natural legendre_factorial_valuation(const Natural& n, Prime p);
std::uint64_t legendre_factorial_valuation(std::uint64_t n, Prime p) noexcept;

/// nu_p(n!) in digit form (n - s_p(n)) / (p - 1). Must agree with the floor sum.
Natural factorial_valuation_from_digits(const Natural& n, Prime p);
std::uint64_t factorial_valuation_from_digits(std::uint64_t n, Prime p) noexcept;

/// C(n, k) by the multiplicative running product with an exact division at
/// every step; 0 when k > n. min(k, n-k) must fit in 64 bits.
Natural binomial(const Natural& n, const Natural& k);

/// nu_3(C(2k,k) C(3k,k)) computed as nu_3((3k)!) - 3 nu_3(k!) from the floor
/// sums. Equals s_3(k).
Natural central_product_valuation(const Natural& k);
std::uint64_t central_product_valuation(std::uint64_t k) noexcept;

}  // namespace nu3
