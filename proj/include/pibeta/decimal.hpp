#pragma once

#include <string>
#include <string_view>

#include "pibeta/rational.hpp"

namespace pibeta {

enum class RoundingMode { truncate, round_half_up };

const char* to_string(RoundingMode mode) noexcept;
/// Accepts "truncate" / "trunc" and "round" / "round_half_up". Throws Error(usage).
RoundingMode parse_rounding_mode(std::string_view text);

struct DecimalRendering {
  Rational source;
  unsigned long digits;
  RoundingMode mode;
  std::string text;
};

/// Base-10 long division of |value| to `digits` places. Truncation drops the
/// tail, round_half_up rounds the magnitude half away from zero. The sign is
/// printed as a leading '-' unless the rendered magnitude is zero.
DecimalRendering to_decimal(const Rational& value, unsigned long digits,
                            RoundingMode mode = RoundingMode::truncate);

/// Scaled integer ⌊|value|·10^digits⌋ (or rounded), sign restored.
Integer scaled_decimal(const Rational& value, unsigned long digits, RoundingMode mode);

/// Smallest k >= 0 with 10^−k <= width. Throws Error(domain) for width <= 0.
unsigned long decimal_order(const Rational& width);

}  // namespace pibeta
