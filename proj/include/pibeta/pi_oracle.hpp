#pragma once

#include <string>

#include "pibeta/integer.hpp"
#include "pibeta/rational.hpp"

namespace pibeta {

/// Fixed-point approximation of π: scaled_value = ⌊π·10^digits⌋.
///
/// The truncation is certified: π·10^digits lies in [scaled_value,
/// scaled_value + 1), so |scaled_value − π·10^digits| < max_error_ulp = 1.
struct PiApproximation {
  unsigned long digits;
  Integer scaled_value;
  unsigned long max_error_ulp = 1;

  /// scaled_value·10^−digits ≤ π
  [[nodiscard]] Rational lower() const;
  /// π < (scaled_value + 1)·10^−digits
  [[nodiscard]] Rational upper() const;

  /// "3.1415…" with exactly `digits` decimal places.
  [[nodiscard]] std::string to_string() const;
};

/// scale·arctan(1/k) rounded to the nearest integer, error <= 1.
///
/// Evaluates Σ (−1)^n / ((2n+1)·k^{2n+1}) in integer arithmetic at an
/// internal guard scale, so truncation error in the individual terms never
/// reaches the returned last digit. Throws Error(domain) for k < 2 or
/// scale < 10.
Integer arctan_recip_scaled(long k, const Integer& scale);

/// Machin: π = 16·arctan(1/5) − 4·arctan(1/239), evaluated with at least ten
/// guard digits. Throws Error(domain) for digits < 1.
PiApproximation pi_scaled(unsigned long digits);

}  // namespace pibeta
