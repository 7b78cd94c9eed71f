#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "pibeta/error.hpp"
#include "pibeta/verify.hpp"

namespace pibeta {
namespace {

VerificationReport run(long q_max, std::optional<unsigned long> digits = 35, unsigned threads = 1,
                       const FixtureSet& fixtures = FixtureSet::builtin()) {
  VerifyOptions options;
  options.q_max = q_max;
  options.digits = digits;
  options.threads = threads;
  return verify_report(options, fixtures);
}

TEST(VerifyReport, QMaxThree) {
  VerificationReport report = run(3);
  ASSERT_EQ(report.entries.size(), 3u);
  for (const auto& e : report.entries) EXPECT_TRUE(e.brackets_pi) << e.record.q;
  EXPECT_EQ(report.entries[2].paper_row_match, RowMatch::match);
  EXPECT_EQ(report.oracle_digits, 45u);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(VerifyReport, QMaxTwoFlagsPrintedRow) {
  VerificationReport report = run(2);
  const auto& e = report.entries[1];
  EXPECT_TRUE(e.brackets_pi);
  EXPECT_EQ(e.paper_row_match, RowMatch::mismatch);
  ASSERT_TRUE(e.paper.has_value());
  EXPECT_EQ(e.paper->fixture.annotation, Consistency::expected_inconsistent);
  EXPECT_FALSE(e.paper->paper_interval_contains_pi);
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(VerifyReport, QMaxOneHasNoPrintedRow) {
  VerificationReport report = run(1);
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_TRUE(report.entries[0].brackets_pi);
  EXPECT_EQ(report.entries[0].paper_row_match, RowMatch::absent);
  EXPECT_FALSE(report.rounding_resolution.has_value());
  EXPECT_TRUE(report.passed());
}

TEST(VerifyReport, FullTableResolvesRounding) {
  VerificationReport report = run(11);
  EXPECT_EQ(report.summary.consistent_rows_matched, 5u);
  EXPECT_EQ(report.summary.consistent_rows_mismatched, 0u);
  EXPECT_EQ(report.summary.inconsistent_rows_confirmed, 5u);
  EXPECT_EQ(report.summary.table_mismatches, 0u);
  ASSERT_TRUE(report.rounding_resolution.has_value());
  EXPECT_EQ(*report.rounding_resolution, RoundingMode::round_half_up);
  for (const auto& e : report.entries) {
    if (!e.paper) continue;
    EXPECT_EQ(e.paper->places, 34u);
    if (e.record.q % 2 == 1) {
      EXPECT_TRUE(e.paper->paper_interval_contains_pi) << e.record.q;
      EXPECT_LE(e.paper->ulp_distance, Integer(1));
    } else {
      EXPECT_FALSE(e.paper->paper_interval_contains_pi) << e.record.q;
    }
  }
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(VerifyReport, DefaultDigitsFollowWidth) {
  EXPECT_EQ(required_digits(1), 35u);
  EXPECT_EQ(required_digits(20), 61u);  // w(20) = B(81,81)/(2·4^19)
  VerificationReport report = run(20, std::nullopt);
  EXPECT_EQ(report.digits, required_digits(20));
  EXPECT_TRUE(report.passed());
}

TEST(VerifyReport, RejectsLowPrecision) {
  EXPECT_THROW(run(3, 34), Error);
  try {
    run(20, 60);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precision);
  }
  EXPECT_THROW(run(0), Error);
}

TEST(VerifyReport, TamperedConsistentRowFails) {
  std::vector<TableFixture> rows = FixtureSet::builtin().rows();
  for (auto& row : rows) {
    if (row.table == "bounds" && row.index == 3) row.value = "3.1415926534037147847889535869075599";
  }
  VerificationReport report = run(3, 35, 1, FixtureSet(rows));
  EXPECT_EQ(report.entries[2].paper_row_match, RowMatch::mismatch);
  EXPECT_EQ(report.summary.consistent_rows_mismatched, 1u);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.exit_code(), 2);
}

TEST(VerifyReport, LastPlaceDifferenceStillMatches) {
  std::vector<TableFixture> rows = FixtureSet::builtin().rows();
  for (auto& row : rows) {
    if (row.table == "bounds" && row.index == 3) row.value = "3.1415926534037147847889535869075512";
  }
  VerificationReport report = run(3, 35, 1, FixtureSet(rows));
  EXPECT_EQ(report.entries[2].paper_row_match, RowMatch::match);
  EXPECT_TRUE(report.entries[2].paper->exact_modes.empty());
  EXPECT_TRUE(report.passed());
}

TEST(VerifyReport, TamperedTableValueFails) {
  std::vector<TableFixture> rows = FixtureSet::builtin().rows();
  for (auto& row : rows) {
    if (row.table == "A_values" && row.index == 2) row.value = "47171/15016";
  }
  VerificationReport report = run(1, 35, 1, FixtureSet(rows));
  EXPECT_EQ(report.summary.table_mismatches, 1u);
  EXPECT_EQ(report.exit_code(), 2);
}

TEST(VerifyReport, ThreadCountDoesNotChangeOutput) {
  EXPECT_EQ(render_report_text(run(11, 40, 1)), render_report_text(run(11, 40, 6)));
  EXPECT_EQ(render_report_json(run(11, 40, 1)), render_report_json(run(11, 40, 6)));
}

TEST(VerifyReport, JsonShape) {
  auto doc = nlohmann::json::parse(render_report_json(run(4)));
  EXPECT_EQ(doc["q_range"], nlohmann::json::array({1, 4}));
  ASSERT_EQ(doc["entries"].size(), 4u);
  EXPECT_EQ(doc["entries"][0]["paper_row_match"], "absent");
  EXPECT_EQ(doc["entries"][1]["paper"]["annotation"], "expected_inconsistent");
  EXPECT_EQ(doc["entries"][2]["paper"]["exact_modes"], nlohmann::json::array({"truncate", "round_half_up"}));
  EXPECT_EQ(doc["entries"][0]["lower"]["num"], "1979");
  EXPECT_TRUE(doc["summary"]["passed"]);
  EXPECT_EQ(doc["rounding_resolution"], "truncate");
}

TEST(CertifyContainsPi, DecidesNearbyIntervals) {
  PiApproximation oracle = pi_scaled(20);
  Rational pi40 = Rational::from_string("3.1415926535897932384626433832795028841971");
  Rational tiny(Integer(1), Integer::pow10(38));
  // Endpoints closer to π than the oracle's ulp force refinement.
  EXPECT_EQ(certify_contains_pi(pi40 - tiny, pi40 + tiny, oracle), Containment::contains);
  EXPECT_EQ(certify_contains_pi(pi40 + tiny, pi40 + tiny + tiny, oracle), Containment::excludes);
  EXPECT_EQ(certify_contains_pi(Rational(3), Rational(4), oracle), Containment::contains);
  EXPECT_EQ(certify_contains_pi(Rational(4), Rational(5), oracle), Containment::excludes);
}

}  // namespace
}  // namespace pibeta
