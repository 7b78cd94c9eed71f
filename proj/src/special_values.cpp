#include "pibeta/special_values.hpp"

#include <string>

#include "pibeta/error.hpp"

namespace pibeta {

BetaValue beta_int(long r, long s) {
  if (r < 1 || s < 1) {
    throw Error(ErrorCode::domain, "beta_int: B(" + std::to_string(r) + ", " + std::to_string(s) +
                                       ") diverges; arguments must be positive");
  }
  const auto ur = static_cast<unsigned long>(r);
  const auto us = static_cast<unsigned long>(s);
  return {r, s, Rational(factorial(ur - 1) * factorial(us - 1), factorial(ur + us - 1))};
}

Rational lambda_coeff(long q) {
  if (q < 1) throw Error(ErrorCode::domain, "lambda_coeff: q must be >= 1, got " + std::to_string(q));
  return pow(Rational(Integer(-1), Integer(4)), q - 1);
}

BetaValue kq_value(long q) {
  if (q < 1) throw Error(ErrorCode::domain, "kq_value: q must be >= 1, got " + std::to_string(q));
  return beta_int(4 * q + 1, 4 * q + 1);
}

}  // namespace pibeta
