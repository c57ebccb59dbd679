#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nu3 {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "GMP ui fast paths assume a 64-bit unsigned long");

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over mpz_class that refuses to go negative: subtraction
/// that would underflow throws std::domain_error instead of wrapping.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(mpz_class v);

  /// Parses an unbounded decimal string (digits only, no sign, no spaces).
  static Natural parse(std::string_view decimal);
  static Natural pow(std::uint64_t base, std::uint64_t exponent);

  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return mpz_sgn(value_.get_mpz_t()) == 0; }
  bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  /// Throws std::out_of_range when the value does not fit.
  std::uint64_t to_u64() const;

  std::string to_string() const { return value_.get_str(10); }
  std::size_t bit_length() const noexcept;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator*=(std::uint64_t rhs);
  Natural& operator<<=(std::uint64_t bits);

  /// Exact division; the caller guarantees rhs divides *this.
  Natural& divide_exact(std::uint64_t rhs);
  Natural& divide_exact(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator*(Natural lhs, std::uint64_t rhs) { return lhs *= rhs; }
  friend Natural operator<<(Natural lhs, std::uint64_t bits) { return lhs <<= bits; }
  /// Floor division and remainder; division by zero throws std::domain_error.
  friend Natural operator/(const Natural& lhs, const Natural& rhs);
  friend Natural operator%(const Natural& lhs, const Natural& rhs);

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// b^e for a Natural base.
Natural power(const Natural& base, std::uint64_t exponent);

}  // namespace nu3
