#include "pibeta/integer.hpp"

#include <ostream>

#include "pibeta/error.hpp"

namespace pibeta {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

void require_nonzero(const Integer& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "integer division by zero");
}

}  // namespace

Integer Integer::from_string(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::parse, "empty integer literal");
  for (char c : digits) {
    if (!is_digit(c)) throw Error(ErrorCode::parse, "invalid integer literal '" + std::string(text) + "'");
  }
  mpz_class value(std::string(digits), 10);
  if (text.front() == '-') value = -value;
  return Integer(std::move(value));
}

Integer Integer::pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return Integer(std::move(out));
}

Integer Integer::pow(unsigned long exponent) const {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), exponent);
  return Integer(std::move(out));
}

std::size_t Integer::decimal_digits() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overestimate by one for base 10.
  std::size_t estimate = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (estimate > 1 && abs() < pow10(estimate - 1)) --estimate;
  return estimate;
}

Integer floor_div(const Integer& a, const Integer& b) {
  require_nonzero(b);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(q));
}

Integer trunc_div(const Integer& a, const Integer& b) {
  require_nonzero(b);
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(q));
}

Integer floor_mod(const Integer& a, const Integer& b) {
  require_nonzero(b);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(r));
}

Integer exact_div(const Integer& a, const Integer& b) {
  require_nonzero(b);
  if (!mpz_divisible_p(a.backend().get_mpz_t(), b.backend().get_mpz_t())) {
    throw Error(ErrorCode::internal_consistency, "exact_div: divisor does not divide dividend");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(q));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(g));
}

Integer factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Integer(std::move(out));
}

Integer double_factorial(unsigned long n) {
  mpz_class out;
  mpz_2fac_ui(out.get_mpz_t(), n);
  return Integer(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Integer& value) {
  return os << value.to_string();
}

}  // namespace pibeta
