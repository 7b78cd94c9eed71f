#pragma once

#include <iosfwd>

#include "pibeta/rational.hpp"

namespace pibeta {

/// re + im·i with exact rational components.
struct GaussianRational {
  Rational re;
  Rational im;

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] GaussianRational conjugate() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& rhs) {
    Rational r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational pow(const GaussianRational& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace pibeta
