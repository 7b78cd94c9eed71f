#pragma once

#include <cstddef>
#include <optional>

#include "pibeta/rational.hpp"

namespace pibeta {

/// Everything known about one member q of the family, with its certified
/// bracket lower < π < upper.
struct ApproximationRecord {
  long q;
  Rational lambda;   // λ_q
  Rational a_value;  // 𝒜_q = ∫₀¹ P_q(x)/(x²+1) dx
  Rational k_value;  // 𝒦_q = B(4q+1, 4q+1)
  Rational lower;
  Rational upper;

  [[nodiscard]] Rational width() const { return upper - lower; }
};

/// 𝒜_q, by exact division of P_q by x² + 1 and integration of the quotient.
/// Throws Error(internal_consistency) if the division leaves a remainder.
Rational compute_A(long q);

/// The bracket is the pair {𝒜_q − λ_q𝒦_q, 𝒜_q − λ_q𝒦_q/2}, ordered. Both
/// parities go through the same assembly; the sign of λ_q decides which
/// endpoint is the lower one.
ApproximationRecord compute_bounds(long q);

/// |λ_q|·𝒦_q/2, computed without 𝒜_q.
Rational interval_width(long q);

/// Certificate for the closed form
///
///   𝒜_q − π = c_q · ₃F₂(1, 2q+½, 2q+1; 4q+1, 4q+3/2; −1)
///
/// where c_q = (−1)^{q+1}·2^{4q+1}·(4q)! / (2^{10q−1}·(8q+1)!!) is the
/// rational left after cancelling √π against Γ(4q+3/2).
///
/// The series alternates with strictly decreasing terms, so the partial sums
/// with n_terms − 1 and n_terms terms bracket its value. The bracket stored
/// here is already scaled by the prefactor and ordered.
struct HypergeomCertificate {
  long q;
  Rational prefactor;
  std::size_t n_terms;
  Rational bracket_low;
  Rational bracket_high;

  [[nodiscard]] Rational width() const { return bracket_high - bracket_low; }
};

inline constexpr std::size_t kHypergeomMaxTerms = 10000;

/// Throws Error(domain) for q < 1 or n_terms < 2. Without n_terms, uses the
/// smallest count whose bracket is narrower than interval_width(q)/100, up to
/// kHypergeomMaxTerms.
HypergeomCertificate hypergeom_bracket(long q, std::optional<std::size_t> n_terms = std::nullopt);

/// c_q alone.
Rational hypergeom_prefactor(long q);

}  // namespace pibeta
