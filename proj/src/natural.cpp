#include "nu3/natural.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace nu3 {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a nonnegative decimal integer: '" + std::string(decimal) + "'");
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exponent) {
  Natural out;
  mpz_ui_pow_ui(out.value_.get_mpz_t(), base, exponent);
  return out;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::out_of_range("Natural does not fit in 64 bits");
  return value_.get_ui();
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) throw std::domain_error("Natural: subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(std::uint64_t rhs) {
  mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), rhs);
  return *this;
}

Natural& Natural::operator<<=(std::uint64_t bits) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural& Natural::divide_exact(std::uint64_t rhs) {
  if (rhs == 0) throw std::domain_error("Natural: division by zero");
  mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), rhs);
  return *this;
}

Natural& Natural::divide_exact(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural operator/(const Natural& lhs, const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  Natural out;
  mpz_fdiv_q(out.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return out;
}

Natural operator%(const Natural& lhs, const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  Natural out;
  mpz_fdiv_r(out.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

Natural power(const Natural& base, std::uint64_t exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Natural(std::move(out));
}

}  // namespace nu3
