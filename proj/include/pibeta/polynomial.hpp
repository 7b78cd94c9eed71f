#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "pibeta/gaussian.hpp"
#include "pibeta/rational.hpp"

namespace pibeta {

/// Dense univariate polynomial over Rational.
///
/// Coefficient k multiplies x^k. The highest stored coefficient is never zero;
/// the zero polynomial is the empty sequence and has no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  /// c·x^k
  static Polynomial monomial(std::size_t k, Rational c);

  [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }
  [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
  [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coefficients_; }
  /// Zero beyond the degree.
  [[nodiscard]] Rational coefficient(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;  // degree <= 1
};

/// 4 + λ_q·x^{4q}(1 − x)^{4q}, with λ_q = (−1/4)^{q−1}. Degree 8q.
/// Throws Error(domain) for q < 1.
Polynomial build_poly_P(long q);

/// Row n of Pascal's triangle, C(n, 0) .. C(n, n).
std::vector<Integer> binomial_row(unsigned long n);

/// Horner evaluation at a Gaussian rational point.
GaussianRational poly_eval_gauss(const Polynomial& p, const GaussianRational& z);
Rational poly_eval(const Polynomial& p, const Rational& x);

/// Synthetic division by x² + 1 with dividend = (x² + 1)·quotient + remainder.
DivisionResult divrem_x2_plus_1(const Polynomial& p);

/// ∫₀¹ p(x) dx = Σ c_k/(k+1).
Rational integrate_unit_interval(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace pibeta
