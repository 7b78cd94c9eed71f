#include "pibeta/gaussian.hpp"

#include <ostream>

namespace pibeta {

GaussianRational pow(const GaussianRational& base, unsigned long exponent) {
  GaussianRational result{Rational(1), Rational(0)};
  GaussianRational square = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  os << value.re;
  if (value.im.sign() < 0) return os << " - " << value.im.abs() << "i";
  return os << " + " << value.im << "i";
}

}  // namespace pibeta
