#include "pibeta/pi_bounds.hpp"

#include <string>

#include "pibeta/error.hpp"

namespace pibeta {

Rational hypergeom_prefactor(long q) {
  if (q < 1) throw Error(ErrorCode::domain, "hypergeom_prefactor: q must be >= 1, got " + std::to_string(q));
  const auto uq = static_cast<unsigned long>(q);
  // √π·Γ(4q+1)/Γ(4q+3/2) with Γ(4q+3/2) = (8q+1)!!·√π / 2^{4q+1}
  Integer num = Integer(2).pow(4 * uq + 1) * factorial(4 * uq);
  Integer den = Integer(2).pow(10 * uq - 1) * double_factorial(8 * uq + 1);
  Rational prefactor(num, den);
  return (q % 2 == 1) ? prefactor : -prefactor;
}

HypergeomCertificate hypergeom_bracket(long q, std::optional<std::size_t> n_terms) {
  if (q < 1) throw Error(ErrorCode::domain, "hypergeom_bracket: q must be >= 1, got " + std::to_string(q));
  if (n_terms && *n_terms < 2) {
    throw Error(ErrorCode::domain, "hypergeom_bracket: need at least 2 terms for a bracket");
  }
  Rational prefactor = hypergeom_prefactor(q);

  // t_0 = 1 and, with the (1)_n/n! factor cancelled,
  //   t_{n+1}/t_n = −(2q+½+n)(2q+1+n) / ((4q+1+n)(4q+3/2+n))
  //              = −(4q+1+2n)(2q+1+n) / ((4q+1+n)(8q+3+2n)).
  auto ratio = [q](long n) {
    return Rational(-Integer(4 * q + 1 + 2 * n) * Integer(2 * q + 1 + n),
                    Integer(4 * q + 1 + n) * Integer(8 * q + 3 + 2 * n));
  };

  std::optional<Rational> target;
  if (!n_terms) target = interval_width(q) / Rational(100);
  const std::size_t limit = n_terms ? *n_terms : kHypergeomMaxTerms;
  const Rational scale = prefactor.abs();

  Rational term(1);           // t_{N-1}
  Rational previous_sum(0);   // S_{N-1}
  Rational sum(1);            // S_N, starting at N = 1
  std::size_t count = 1;
  while (count < limit) {
    term *= ratio(static_cast<long>(count) - 1);
    previous_sum = sum;
    sum += term;
    ++count;
    if (target && scale * term.abs() < *target) break;
  }

  Rational a = prefactor * previous_sum;
  Rational b = prefactor * sum;
  bool a_is_low = a < b;
  return HypergeomCertificate{
      .q = q,
      .prefactor = std::move(prefactor),
      .n_terms = count,
      .bracket_low = a_is_low ? a : b,
      .bracket_high = a_is_low ? b : a,
  };
}

}  // namespace pibeta
