#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pibeta/integer.hpp"

namespace pibeta {

/// Exact rational number, always in canonical form.
///
/// - denominator > 0, the sign lives on the numerator
/// - gcd(|numerator|, denominator) = 1
/// - zero is 0/1
///
/// Because the form is canonical, equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value)           // NOLINT(google-explicit-constructor)
      : value_(value.backend()) {}

  /// numerator/denominator, normalized. Throws Error(zero_denominator).
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "n", "n/d" and plain decimals "[-]i.fff". Throws Error(parse).
  static Rational from_string(std::string_view text);

  [[nodiscard]] Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  [[nodiscard]] Integer denominator() const { return Integer(mpz_class(value_.get_den())); }

  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return value_.get_den() == 1; }

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  /// Throws Error(division_by_zero) for zero.
  [[nodiscard]] Rational reciprocal() const;

  /// "n/d", or "n" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const mpq_class& backend() const noexcept { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  /// Throws Error(division_by_zero).
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// Normalized numerator/denominator. Throws Error(zero_denominator).
inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
  return Rational(numerator, denominator);
}

/// base^exponent for any signed exponent; pow(x, 0) = 1 (including x = 0).
/// Throws Error(division_by_zero) for zero raised to a negative power.
Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace pibeta
