#include "pibeta/pi_oracle.hpp"

#include <string>

#include "pibeta/error.hpp"

namespace pibeta {

namespace {

/// Σ (−1)^n·⌊⌊scale/k^{2n+1}⌋/(2n+1)⌋ until the power term vanishes. Each
/// term is truncated, so the result is within (number of terms + 1) of
/// scale·arctan(1/k).
struct SeriesSum {
  Integer value;
  unsigned long terms;
};

SeriesSum arctan_series(long k, const Integer& scale) {
  const Integer k_squared = Integer(k) * Integer(k);
  Integer power = trunc_div(scale, Integer(k));
  SeriesSum out{Integer(0), 0};
  for (unsigned long n = 0; !power.is_zero(); ++n) {
    Integer term = trunc_div(power, Integer(2 * n + 1));
    if (n % 2 == 0) out.value += term;
    else out.value -= term;
    power = trunc_div(power, k_squared);
    ++out.terms;
  }
  return out;
}

}  // namespace

Integer arctan_recip_scaled(long k, const Integer& scale) {
  if (k < 2) throw Error(ErrorCode::domain, "arctan_recip_scaled: k must be >= 2, got " + std::to_string(k));
  if (scale < Integer(10)) throw Error(ErrorCode::domain, "arctan_recip_scaled: scale must be >= 10");

  // The series needs about log10(scale)/(2·log10 k) terms; pick the guard
  // scale so that many truncation errors stay far below half a unit.
  const unsigned long terms_estimate = scale.decimal_digits() + 2;
  const unsigned long guard_digits = Integer(static_cast<long>(terms_estimate)).decimal_digits() + 2;
  const Integer guard = Integer::pow10(guard_digits);

  SeriesSum series = arctan_series(k, scale * guard);
  // Round to nearest: ⌊(x + guard/2)/guard⌋
  return floor_div(series.value + trunc_div(guard, Integer(2)), guard);
}

Rational PiApproximation::lower() const {
  return Rational(scaled_value, Integer::pow10(digits));
}

Rational PiApproximation::upper() const {
  return Rational(scaled_value + Integer(1), Integer::pow10(digits));
}

std::string PiApproximation::to_string() const {
  std::string text = scaled_value.to_string();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, 1, '.');
  return text;
}

PiApproximation pi_scaled(unsigned long digits) {
  if (digits < 1) throw Error(ErrorCode::domain, "pi_scaled: digits must be >= 1");

  for (unsigned long guard_digits = 10;; guard_digits += 10) {
    const Integer scale = Integer::pow10(digits + guard_digits);
    // Each rounded arctangent is within 1 of its true scaled value.
    const Integer estimate = Integer(16) * arctan_recip_scaled(5, scale) -
                             Integer(4) * arctan_recip_scaled(239, scale);
    const Integer error(20);
    const Integer guard = Integer::pow10(guard_digits);
    Integer low = floor_div(estimate - error, guard);
    Integer high = floor_div(estimate + error, guard);
    // Truncation is certain once both ends of the error interval agree.
    if (low == high) return PiApproximation{digits, std::move(low), 1};
  }
}

}  // namespace pibeta
