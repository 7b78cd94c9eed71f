#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pibeta {

/// Arbitrary-precision signed integer.
///
/// Thin value type over a GMP integer. Sign and magnitude are implicit in the
/// backend (sign() is 0 exactly when the value is zero); there is no upper
/// bound on the magnitude.
class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Integer(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optional sign followed by decimal digits. Throws Error(parse).
  static Integer from_string(std::string_view text);

  /// 10^exponent.
  static Integer pow10(unsigned long exponent);

  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool is_one() const noexcept { return value_ == 1; }

  [[nodiscard]] Integer abs() const { return Integer(mpz_class(::abs(value_))); }
  [[nodiscard]] Integer pow(unsigned long exponent) const;

  /// Number of decimal digits of |*this|; 1 for zero.
  [[nodiscard]] std::size_t decimal_digits() const;

  /// Decimal representation with a leading '-' for negative values.
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  /// True if the value fits in a signed 64-bit integer.
  [[nodiscard]] bool fits_long() const noexcept { return value_.fits_slong_p(); }
  [[nodiscard]] long to_long() const { return value_.get_si(); }

  [[nodiscard]] const mpz_class& backend() const noexcept { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }

  Integer& operator+=(const Integer& rhs) { value_ += rhs.value_; return *this; }
  Integer& operator-=(const Integer& rhs) { value_ -= rhs.value_; return *this; }
  Integer& operator*=(const Integer& rhs) { value_ *= rhs.value_; return *this; }

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// Quotient rounded toward negative infinity. Throws Error(division_by_zero).
Integer floor_div(const Integer& a, const Integer& b);
/// Quotient rounded toward zero. Throws Error(division_by_zero).
Integer trunc_div(const Integer& a, const Integer& b);
/// Remainder of floor_div; has the sign of b.
Integer floor_mod(const Integer& a, const Integer& b);
/// Exact quotient; b must divide a.
Integer exact_div(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

/// n!
Integer factorial(unsigned long n);

/// Product of the odd integers 1·3·5···n for odd n, of the even ones for even
/// n; 0!! = 1.
Integer double_factorial(unsigned long n);

std::ostream& operator<<(std::ostream& os, const Integer& value);

}  // namespace pibeta
