#pragma once

#include "pibeta/rational.hpp"

namespace pibeta {

/// Euler Beta B(r, s) at positive integer arguments, keeping its arguments
/// for labelling.
struct BetaValue {
  long r;
  long s;
  Rational value;

  friend bool operator==(const BetaValue&, const BetaValue&) = default;
};

/// (r−1)!(s−1)!/(r+s−1)!. The integral diverges unless r, s > 0, so
/// non-positive arguments throw Error(domain).
BetaValue beta_int(long r, long s);

/// (−1/4)^{q−1}, the unique λ making x² + 1 divide 4 + λ·x^{4q}(1−x)^{4q}.
Rational lambda_coeff(long q);

/// ∫₀¹ x^{4q}(1−x)^{4q} dx = B(4q+1, 4q+1)
BetaValue kq_value(long q);

}  // namespace pibeta
