#include "pibeta/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "pibeta/error.hpp"
#include "pibeta/special_values.hpp"

namespace pibeta {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(std::size_t k, Rational c) {
  std::vector<Rational> coefficients(k + 1);
  coefficients[k] = std::move(c);
  return Polynomial(std::move(coefficients));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::vector<Integer> binomial_row(unsigned long n) {
  std::vector<Integer> row;
  row.reserve(n + 1);
  row.emplace_back(1);
  for (unsigned long k = 0; k < n; ++k) {
    row.push_back(exact_div(row.back() * Integer(n - k), Integer(k + 1)));
  }
  return row;
}

Polynomial build_poly_P(long q) {
  if (q < 1) throw Error(ErrorCode::domain, "build_poly_P: q must be >= 1, got " + std::to_string(q));
  const auto n = static_cast<unsigned long>(4 * q);
  const Rational lambda = lambda_coeff(q);

  std::vector<Rational> coefficients(2 * n + 1);
  coefficients[0] = Rational(4);
  // λ·x^n·(1 − x)^n = Σ_k λ·(−1)^k·C(n, k)·x^{n+k}
  std::vector<Integer> row = binomial_row(n);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational term = lambda * Rational(row[k]);
    coefficients[n + k] += (k % 2 == 0) ? term : -term;
  }
  return Polynomial(std::move(coefficients));
}

GaussianRational poly_eval_gauss(const Polynomial& p, const GaussianRational& z) {
  GaussianRational acc{Rational(0), Rational(0)};
  const auto coefficients = p.coefficients();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= z;
    acc.re += *it;
  }
  return acc;
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  const auto coefficients = p.coefficients();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

DivisionResult divrem_x2_plus_1(const Polynomial& p) {
  const auto dividend = p.coefficients();
  if (dividend.size() < 3) return {Polynomial(), p};

  // Working from the top: the leading term c·x^d leaves c·x^{d-2} in the
  // quotient and subtracts c·x^{d-2} from the running remainder.
  std::vector<Rational> rest(dividend.begin(), dividend.end());
  std::vector<Rational> quotient(dividend.size() - 2);
  for (std::size_t d = rest.size() - 1; d >= 2; --d) {
    quotient[d - 2] = rest[d];
    rest[d - 2] -= rest[d];
    rest[d] = Rational(0);
  }
  rest.resize(2);
  return {Polynomial(std::move(quotient)), Polynomial(std::move(rest))};
}

Rational integrate_unit_interval(const Polynomial& p) {
  const auto coefficients = p.coefficients();
  // Pairwise summation keeps intermediate denominators balanced for high degrees.
  std::vector<Rational> terms;
  terms.reserve(coefficients.size());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (!coefficients[k].is_zero()) terms.push_back(coefficients[k] / Rational(static_cast<long>(k + 1)));
  }
  if (terms.empty()) return Rational(0);
  while (terms.size() > 1) {
    std::size_t half = 0;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) terms[half++] = terms[i] + terms[i + 1];
    if (terms.size() % 2 == 1) terms[half++] = std::move(terms.back());
    terms.resize(half);
  }
  return terms.front();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  const auto coefficients = p.coefficients();
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational magnitude = c.abs();
    if (k == 0 || magnitude != Rational(1)) os << magnitude;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os;
}

}  // namespace pibeta
