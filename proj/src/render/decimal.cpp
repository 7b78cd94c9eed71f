#include "pibeta/decimal.hpp"

#include "pibeta/error.hpp"

namespace pibeta {

const char* to_string(RoundingMode mode) noexcept {
  switch (mode) {
    case RoundingMode::truncate: return "truncate";
    case RoundingMode::round_half_up: return "round_half_up";
  }
  return "unknown";
}

RoundingMode parse_rounding_mode(std::string_view text) {
  if (text == "truncate" || text == "trunc") return RoundingMode::truncate;
  if (text == "round" || text == "round_half_up") return RoundingMode::round_half_up;
  throw Error(ErrorCode::usage, "unknown rounding mode '" + std::string(text) + "'");
}

Integer scaled_decimal(const Rational& value, unsigned long digits, RoundingMode mode) {
  const Integer num = value.numerator().abs() * Integer::pow10(digits);
  const Integer den = value.denominator();
  Integer scaled = mode == RoundingMode::truncate
                       ? floor_div(num, den)
                       : floor_div(Integer(2) * num + den, Integer(2) * den);
  return value.sign() < 0 ? -scaled : scaled;
}

DecimalRendering to_decimal(const Rational& value, unsigned long digits, RoundingMode mode) {
  Integer scaled = scaled_decimal(value, digits, mode);
  std::string magnitude = scaled.abs().to_string();
  if (magnitude.size() <= digits) magnitude.insert(0, digits + 1 - magnitude.size(), '0');
  if (digits > 0) magnitude.insert(magnitude.size() - digits, 1, '.');
  std::string text = scaled.sign() < 0 ? "-" + magnitude : magnitude;
  return {value, digits, mode, std::move(text)};
}

unsigned long decimal_order(const Rational& width) {
  if (width.sign() <= 0) throw Error(ErrorCode::domain, "decimal_order: width must be positive");
  const Integer num = width.numerator();
  const Integer den = width.denominator();
  // 10^−k <= num/den  <=>  den <= num·10^k
  unsigned long k = den.decimal_digits() > num.decimal_digits()
                        ? den.decimal_digits() - num.decimal_digits() - 1
                        : 0;
  while (num * Integer::pow10(k) < den) ++k;
  return k;
}

}  // namespace pibeta
