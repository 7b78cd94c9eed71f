#include <gtest/gtest.h>

#include "pibeta/decimal.hpp"
#include "pibeta/error.hpp"
#include "pibeta/pi_bounds.hpp"
#include "pibeta/pi_oracle.hpp"
#include "pibeta/polynomial.hpp"
#include "pibeta/special_values.hpp"

namespace pibeta {
namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

/// Oracle resolving `width` with ten more decimal orders to spare.
PiApproximation oracle_for(const Rational& width) { return pi_scaled(decimal_order(width) + 10); }

TEST(ComputeA, Examples) {
  EXPECT_EQ(compute_A(1), q(22, 7));
  EXPECT_EQ(compute_A(2), q(47171, 15015));
  EXPECT_EQ(compute_A(3), q(431302721, 137287920));
  EXPECT_EQ(compute_A(4), Rational::from_string("741269838109/235953517800"));
  EXPECT_EQ(compute_A(5), Rational::from_string("26856502742629699/8548690331301120"));
  EXPECT_THROW(compute_A(0), Error);
}

TEST(ComputeA, EqualsIntegralOfQuotient) {
  for (long qq = 1; qq <= 10; ++qq) {
    DivisionResult d = divrem_x2_plus_1(build_poly_P(qq));
    EXPECT_EQ(compute_A(qq), integrate_unit_interval(d.quotient));
  }
}

TEST(ComputeBounds, QOne) {
  ApproximationRecord r = compute_bounds(1);
  EXPECT_EQ(r.lower, q(1979, 630));
  EXPECT_EQ(r.upper, q(3959, 1260));
  EXPECT_EQ(r.lambda, Rational(1));
  EXPECT_EQ(r.k_value, q(1, 630));
  EXPECT_EQ(r.a_value, q(22, 7));
}

TEST(ComputeBounds, OddRowsAtPrintedPrecision) {
  ApproximationRecord r3 = compute_bounds(3);
  EXPECT_EQ(to_decimal(r3.lower, 34, RoundingMode::round_half_up).text, "3.1415926534037147847889535869075511");
  EXPECT_EQ(to_decimal(r3.upper, 34, RoundingMode::round_half_up).text, "3.1415926538659662229456279799529227");
  ApproximationRecord r5 = compute_bounds(5);
  EXPECT_EQ(to_decimal(r5.lower, 34, RoundingMode::round_half_up).text, "3.1415926535897930996904718896604452");
  EXPECT_EQ(to_decimal(r5.upper, 34, RoundingMode::round_half_up).text, "3.1415926535897934452718625110802259");
}

TEST(ComputeBounds, EvenRowUsesAdditions) {
  // q = 2p: 𝒜 + B(8p+1,8p+1)/2^{4p−1} < π < 𝒜 + B(8p+1,8p+1)/2^{4p−2}
  for (long p = 1; p <= 4; ++p) {
    ApproximationRecord r = compute_bounds(2 * p);
    Rational beta = beta_int(8 * p + 1, 8 * p + 1).value;
    EXPECT_EQ(r.lower, r.a_value + beta / pow(Rational(2), 4 * p - 1));
    EXPECT_EQ(r.upper, r.a_value + beta / pow(Rational(2), 4 * p - 2));
  }
}

TEST(ComputeBounds, OddRowUsesSubtractions) {
  // q = 2p+1: 𝒜 − B(8p+5,8p+5)/2^{4p} < π < 𝒜 − B(8p+5,8p+5)/2^{4p+1}
  for (long p = 0; p <= 4; ++p) {
    ApproximationRecord r = compute_bounds(2 * p + 1);
    Rational beta = beta_int(8 * p + 5, 8 * p + 5).value;
    EXPECT_EQ(r.lower, r.a_value - beta / pow(Rational(2), 4 * p));
    EXPECT_EQ(r.upper, r.a_value - beta / pow(Rational(2), 4 * p + 1));
  }
}

TEST(ComputeBounds, EndpointSetIdentity) {
  for (long qq = 1; qq <= 20; ++qq) {
    ApproximationRecord r = compute_bounds(qq);
    Rational e1 = r.a_value - r.lambda * r.k_value;
    Rational e2 = r.a_value - r.lambda * r.k_value / Rational(2);
    EXPECT_TRUE((r.lower == e1 && r.upper == e2) || (r.lower == e2 && r.upper == e1)) << qq;
    EXPECT_LT(r.lower, r.upper);
    EXPECT_EQ(r.width(), r.lambda.abs() * r.k_value / Rational(2));
  }
}

TEST(ComputeBounds, BracketsPi) {
  for (long qq = 1; qq <= 20; ++qq) {
    ApproximationRecord r = compute_bounds(qq);
    PiApproximation pi = oracle_for(r.width());
    EXPECT_LT(r.lower, pi.lower()) << qq;
    EXPECT_LT(pi.upper(), r.upper) << qq;
  }
}

TEST(ComputeBounds, SignAlternation) {
  for (long qq = 1; qq <= 20; ++qq) {
    ApproximationRecord r = compute_bounds(qq);
    PiApproximation pi = oracle_for(r.width());
    if (qq % 2 == 1) EXPECT_GT(r.a_value, pi.upper()) << qq;
    else EXPECT_LT(r.a_value, pi.lower()) << qq;
  }
}

TEST(IntervalWidth, Examples) {
  EXPECT_EQ(interval_width(1), q(1, 1260));
  EXPECT_EQ(interval_width(2), q(1, 1750320));
  EXPECT_EQ(interval_width(3), q(1, 2163324800));
  for (long qq = 1; qq <= 12; ++qq) EXPECT_EQ(interval_width(qq), compute_bounds(qq).width());
}

TEST(IntervalWidth, StrictlyDecreasing) {
  for (long qq = 1; qq <= 19; ++qq) EXPECT_LT(interval_width(qq + 1), interval_width(qq)) << qq;
}

TEST(HypergeomBracket, PrefactorReduction) {
  EXPECT_EQ(hypergeom_prefactor(1), q(1, 630));
  // (−1)^{q+1}·2^{4q+1}(4q)! / (2^{10q−1}(8q+1)!!)
  EXPECT_EQ(hypergeom_prefactor(2), -Rational(Integer(512) * factorial(8), Integer(524288) * double_factorial(17)));
  EXPECT_LT(hypergeom_prefactor(2), Rational(0));
  EXPECT_GT(hypergeom_prefactor(3), Rational(0));
}

TEST(HypergeomBracket, TwoTermsAtQOne) {
  HypergeomCertificate cert = hypergeom_bracket(1, 2);
  EXPECT_EQ(cert.n_terms, 2u);
  // S_1 = 1, S_2 = 1 − 3/11
  EXPECT_EQ(cert.bracket_low, q(1, 630) * q(8, 11));
  EXPECT_EQ(cert.bracket_high, q(1, 630));
  PiApproximation pi = pi_scaled(30);
  Rational a = compute_A(1);
  EXPECT_LE(cert.bracket_low, a - pi.upper());
  EXPECT_GE(cert.bracket_high, a - pi.lower());
}

TEST(HypergeomBracket, WidthNonIncreasingInTerms) {
  for (long qq = 1; qq <= 3; ++qq) {
    Rational previous = hypergeom_bracket(qq, 2).width();
    for (std::size_t n = 3; n <= 40; ++n) {
      Rational w = hypergeom_bracket(qq, n).width();
      EXPECT_LE(w, previous) << qq << " " << n;
      previous = w;
    }
  }
}

TEST(HypergeomBracket, RejectsBadArguments) {
  EXPECT_THROW(hypergeom_bracket(1, 1), Error);
  EXPECT_THROW(hypergeom_bracket(1, 0), Error);
  EXPECT_THROW(hypergeom_bracket(0), Error);
}

TEST(HypergeomBracket, DefaultAgreesWithSandwich) {
  for (long qq = 1; qq <= 6; ++qq) {
    HypergeomCertificate cert = hypergeom_bracket(qq);
    EXPECT_LT(cert.n_terms, kHypergeomMaxTerms);
    EXPECT_LT(cert.width(), interval_width(qq) / Rational(100));

    ApproximationRecord r = compute_bounds(qq);
    Rational s1 = r.lambda * r.k_value / Rational(2);
    Rational s2 = r.lambda * r.k_value;
    if (s2 < s1) std::swap(s1, s2);
    EXPECT_LE(s1, cert.bracket_low) << qq;
    EXPECT_LE(cert.bracket_high, s2) << qq;

    PiApproximation pi = oracle_for(cert.width());
    EXPECT_LE(cert.bracket_low, r.a_value - pi.upper()) << qq;
    EXPECT_GE(cert.bracket_high, r.a_value - pi.lower()) << qq;
  }
}

}  // namespace
}  // namespace pibeta
