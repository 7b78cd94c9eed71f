#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pibeta/decimal.hpp"
#include "pibeta/fixtures.hpp"
#include "pibeta/pi_bounds.hpp"
#include "pibeta/pi_oracle.hpp"

namespace pibeta {

enum class RowMatch { match, mismatch, absent };

const char* to_string(RowMatch m) noexcept;

/// Outcome of an exact comparison of an interval against the oracle.
enum class Containment { contains, excludes, undecided };

/// Decides lower < π < upper using the oracle's enclosure, refining the oracle
/// (doubling its digits, a few times) while the answer is undecided.
Containment certify_contains_pi(const Rational& lower, const Rational& upper, const PiApproximation& oracle);

/// Comparison of one recomputed bracket against a printed Table 4 row.
struct PaperRowCheck {
  TableFixture fixture;
  unsigned long places;  // decimal places printed in the fixture
  RowMatch match;
  /// Rounding modes under which the printed strings are reproduced exactly.
  std::vector<RoundingMode> exact_modes;
  /// Largest last-place difference across both endpoints, over the best mode.
  Integer ulp_distance;
  bool paper_interval_contains_pi;
};

struct VerificationEntry {
  ApproximationRecord record;
  unsigned long oracle_digits;
  bool brackets_pi;
  RowMatch paper_row_match;
  std::optional<PaperRowCheck> paper;
};

/// Exact comparison of a tables 1–3 fixture with its recomputed value.
struct TableCheck {
  TableFixture fixture;
  std::string computed;
  bool matches;
};

struct VerificationSummary {
  std::size_t entries = 0;
  std::size_t bracket_failures = 0;
  std::size_t consistent_rows_matched = 0;
  std::size_t consistent_rows_mismatched = 0;
  std::size_t inconsistent_rows_confirmed = 0;  // printed row mismatches, as annotated
  std::size_t inconsistent_rows_matched = 0;    // annotated inconsistent yet reproduced
  std::size_t table_mismatches = 0;
};

struct VerificationReport {
  long q_min = 1;
  long q_max;
  unsigned long digits;
  unsigned long oracle_digits;
  std::vector<VerificationEntry> entries;
  std::vector<TableCheck> table_checks;
  /// The rounding mode reproducing every consistent printed bound row exactly,
  /// if one does; truncate wins a tie.
  std::optional<RoundingMode> rounding_resolution;
  VerificationSummary summary;

  /// Every bracket holds and every expected_consistent fixture matches.
  [[nodiscard]] bool passed() const noexcept;
  /// 0 on pass, 2 on verification failure.
  [[nodiscard]] int exit_code() const noexcept { return passed() ? 0 : 2; }
};

struct VerifyOptions {
  long q_max = 1;
  /// Decimal places of comparison; at least 35. Defaults to the smallest value
  /// that resolves interval_width(q_max).
  std::optional<unsigned long> digits;
  unsigned threads = 1;
};

/// Minimum `digits` for which verify_report accepts q_max: decimal order of
/// interval_width(q_max), and never below 35.
unsigned long required_digits(long q_max);

/// Recomputes bounds for q = 1..q_max, checks each against an oracle with
/// digits + 10 places, and compares against the fixtures.
///
/// Throws Error(usage) for q_max < 1 or digits < 35, Error(precision) when
/// digits cannot resolve interval_width(q_max).
VerificationReport verify_report(const VerifyOptions& options, const FixtureSet& fixtures = FixtureSet::builtin());

std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

}  // namespace pibeta
