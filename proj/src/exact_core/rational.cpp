#include "pibeta/rational.hpp"

#include <ostream>

#include "pibeta/error.hpp"

namespace pibeta {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) {
    throw Error(ErrorCode::zero_denominator,
                "rational with zero denominator: " + numerator.to_string() + "/0");
  }
  value_ = mpq_class(numerator.backend(), denominator.backend());
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(Integer::from_string(text.substr(0, slash)),
                    Integer::from_string(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(Integer::from_string(text));

  std::string_view whole = text.substr(0, dot);
  std::string_view fraction = text.substr(dot + 1);
  if (fraction.empty() || fraction.front() == '-' || fraction.front() == '+') {
    throw Error(ErrorCode::parse, "invalid decimal literal '" + std::string(text) + "'");
  }
  std::string digits(whole);
  if (digits.empty() || digits == "-" || digits == "+") digits += '0';
  digits.append(fraction);
  return Rational(Integer::from_string(digits), Integer::pow10(fraction.size()));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::division_by_zero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero() && exponent < 0) {
    throw Error(ErrorCode::division_by_zero, "zero raised to a negative power");
  }
  unsigned long magnitude = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                         : static_cast<unsigned long>(exponent);
  Integer num = base.numerator().pow(magnitude);
  Integer den = base.denominator().pow(magnitude);
  // Powers of a reduced fraction stay reduced.
  return exponent > 0 ? Rational(num, den) : Rational(den, num);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace pibeta
