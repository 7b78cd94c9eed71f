#include "pibeta/pi_bounds.hpp"

#include <string>

#include "pibeta/error.hpp"
#include "pibeta/polynomial.hpp"
#include "pibeta/special_values.hpp"

namespace pibeta {

namespace {

void require_positive_q(long q, const char* where) {
  if (q < 1) throw Error(ErrorCode::domain, std::string(where) + ": q must be >= 1, got " + std::to_string(q));
}

}  // namespace

Rational compute_A(long q) {
  require_positive_q(q, "compute_A");
  DivisionResult division = divrem_x2_plus_1(build_poly_P(q));
  if (!division.remainder.is_zero()) {
    throw Error(ErrorCode::internal_consistency,
                "compute_A: x^2+1 does not divide P_" + std::to_string(q));
  }
  return integrate_unit_interval(division.quotient);
}

ApproximationRecord compute_bounds(long q) {
  require_positive_q(q, "compute_bounds");
  Rational lambda = lambda_coeff(q);
  Rational a_value = compute_A(q);
  Rational k_value = kq_value(q).value;

  Rational full = a_value - lambda * k_value;
  Rational half = a_value - lambda * k_value / Rational(2);
  bool full_is_lower = full < half;
  return ApproximationRecord{
      .q = q,
      .lambda = std::move(lambda),
      .a_value = std::move(a_value),
      .k_value = std::move(k_value),
      .lower = full_is_lower ? full : half,
      .upper = full_is_lower ? half : full,
  };
}

Rational interval_width(long q) {
  require_positive_q(q, "interval_width");
  return lambda_coeff(q).abs() * kq_value(q).value / Rational(2);
}

}  // namespace pibeta
