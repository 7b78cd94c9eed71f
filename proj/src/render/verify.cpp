#include "pibeta/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pibeta/error.hpp"
#include "pibeta/parallel.hpp"
#include "pibeta/special_values.hpp"

namespace pibeta {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned long kMinDigits = 35;
constexpr unsigned long kOracleGuard = 10;
constexpr int kMaxRefinements = 6;

Containment compare(const Rational& lower, const Rational& upper, const PiApproximation& oracle) {
  const Rational lo = oracle.lower();  // lo <= π
  const Rational hi = oracle.upper();  // π < hi
  if (lower < lo && hi <= upper) return Containment::contains;
  if (upper <= lo || lower >= hi) return Containment::excludes;
  return Containment::undecided;
}

unsigned long places_of(const std::string& decimal) {
  auto dot = decimal.find('.');
  return dot == std::string::npos ? 0 : decimal.size() - dot - 1;
}

PaperRowCheck check_paper_row(const ApproximationRecord& record, const TableFixture& fixture,
                              const PiApproximation& oracle) {
  const unsigned long places = places_of(fixture.value);
  const Rational paper_lower = Rational::from_string(fixture.value);
  const Rational paper_upper = Rational::from_string(fixture.upper);
  const Integer paper_lower_scaled = scaled_decimal(paper_lower, places, RoundingMode::truncate);
  const Integer paper_upper_scaled = scaled_decimal(paper_upper, places, RoundingMode::truncate);

  std::vector<RoundingMode> exact_modes;
  std::optional<Integer> best;
  for (RoundingMode mode : {RoundingMode::truncate, RoundingMode::round_half_up}) {
    Integer d_lower = (scaled_decimal(record.lower, places, mode) - paper_lower_scaled).abs();
    Integer d_upper = (scaled_decimal(record.upper, places, mode) - paper_upper_scaled).abs();
    Integer distance = std::max(d_lower, d_upper);
    if (distance.is_zero()) exact_modes.push_back(mode);
    if (!best || distance < *best) best = distance;
  }

  return PaperRowCheck{
      .fixture = fixture,
      .places = places,
      .match = *best <= Integer(1) ? RowMatch::match : RowMatch::mismatch,
      .exact_modes = std::move(exact_modes),
      .ulp_distance = *best,
      .paper_interval_contains_pi =
          certify_contains_pi(paper_lower, paper_upper, oracle) == Containment::contains,
  };
}

std::string recompute_table_value(const TableFixture& fixture) {
  if (fixture.table == "A_values") return compute_A(fixture.index).to_string();
  if (fixture.table == "beta_8p1") return beta_int(8 * fixture.index + 1, 8 * fixture.index + 1).value.to_string();
  if (fixture.table == "beta_8p5") return beta_int(8 * fixture.index + 5, 8 * fixture.index + 5).value.to_string();
  throw Error(ErrorCode::parse, "unknown fixture table '" + fixture.table + "'");
}

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator().to_string()}, {"den", r.denominator().to_string()}};
}

}  // namespace

const char* to_string(RowMatch m) noexcept {
  switch (m) {
    case RowMatch::match: return "match";
    case RowMatch::mismatch: return "mismatch";
    case RowMatch::absent: return "absent";
  }
  return "unknown";
}

Containment certify_contains_pi(const Rational& lower, const Rational& upper, const PiApproximation& oracle) {
  Containment result = compare(lower, upper, oracle);
  unsigned long digits = oracle.digits;
  for (int i = 0; i < kMaxRefinements && result == Containment::undecided; ++i) {
    digits *= 2;
    result = compare(lower, upper, pi_scaled(digits));
  }
  return result;
}

unsigned long required_digits(long q_max) {
  if (q_max < 1) throw Error(ErrorCode::usage, "q_max must be >= 1");
  return std::max(kMinDigits, decimal_order(interval_width(q_max)));
}

bool VerificationReport::passed() const noexcept {
  return summary.bracket_failures == 0 && summary.consistent_rows_mismatched == 0 && summary.table_mismatches == 0;
}

VerificationReport verify_report(const VerifyOptions& options, const FixtureSet& fixtures) {
  if (options.q_max < 1) throw Error(ErrorCode::usage, "q_max must be >= 1, got " + std::to_string(options.q_max));
  const unsigned long needed = required_digits(options.q_max);
  const unsigned long digits = options.digits.value_or(needed);
  if (digits < kMinDigits) {
    throw Error(ErrorCode::usage, "digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
  if (digits < needed) {
    throw Error(ErrorCode::precision, std::to_string(digits) + " digits cannot resolve interval_width(" +
                                          std::to_string(options.q_max) + "); need at least " +
                                          std::to_string(needed));
  }

  VerificationReport report;
  report.q_max = options.q_max;
  report.digits = digits;
  report.oracle_digits = digits + kOracleGuard;
  const PiApproximation oracle = pi_scaled(report.oracle_digits);

  const auto count = static_cast<std::size_t>(options.q_max);
  report.entries = parallel_map(count, options.threads, [&](std::size_t i) {
    const long q = static_cast<long>(i) + 1;
    ApproximationRecord record = compute_bounds(q);
    bool brackets = certify_contains_pi(record.lower, record.upper, oracle) == Containment::contains;
    std::optional<PaperRowCheck> paper;
    if (auto fixture = fixtures.find("bounds", q)) paper = check_paper_row(record, *fixture, oracle);
    RowMatch match = paper ? paper->match : RowMatch::absent;
    return VerificationEntry{std::move(record), report.oracle_digits, brackets, match, std::move(paper)};
  });

  for (const auto& fixture : fixtures.rows()) {
    if (fixture.table == "bounds") continue;
    std::string computed = recompute_table_value(fixture);
    bool matches = Rational::from_string(fixture.value) == Rational::from_string(computed);
    report.table_checks.push_back({fixture, std::move(computed), matches});
  }

  VerificationSummary& s = report.summary;
  s.entries = report.entries.size();
  bool truncate_exact = true;
  bool round_exact = true;
  bool any_consistent = false;
  for (const auto& entry : report.entries) {
    if (!entry.brackets_pi) ++s.bracket_failures;
    if (!entry.paper) continue;
    const bool matched = entry.paper_row_match == RowMatch::match;
    if (entry.paper->fixture.annotation == Consistency::expected_consistent) {
      ++(matched ? s.consistent_rows_matched : s.consistent_rows_mismatched);
      any_consistent = true;
      const auto& modes = entry.paper->exact_modes;
      truncate_exact &= std::ranges::find(modes, RoundingMode::truncate) != modes.end();
      round_exact &= std::ranges::find(modes, RoundingMode::round_half_up) != modes.end();
    } else {
      ++(matched ? s.inconsistent_rows_matched : s.inconsistent_rows_confirmed);
    }
  }
  for (const auto& check : report.table_checks) {
    if (!check.matches && check.fixture.annotation == Consistency::expected_consistent) ++s.table_mismatches;
  }
  if (any_consistent && truncate_exact) report.rounding_resolution = RoundingMode::truncate;
  else if (any_consistent && round_exact) report.rounding_resolution = RoundingMode::round_half_up;
  return report;
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verify q=1.." << report.q_max << " digits=" << report.digits << " oracle_digits=" << report.oracle_digits
      << '\n';
  for (const auto& entry : report.entries) {
    const auto& r = entry.record;
    out << "q=" << r.q << " brackets_pi=" << (entry.brackets_pi ? "true" : "false")
        << " paper_row=" << to_string(entry.paper_row_match);
    if (entry.paper) {
      out << " annotation=" << to_string(entry.paper->fixture.annotation)
          << " ulp_distance=" << entry.paper->ulp_distance
          << " paper_interval_contains_pi=" << (entry.paper->paper_interval_contains_pi ? "true" : "false");
    }
    out << '\n';
    out << "  lower=" << to_decimal(r.lower, report.digits).text << '\n';
    out << "  upper=" << to_decimal(r.upper, report.digits).text << '\n';
    if (entry.paper) {
      out << "  paper_lower=" << entry.paper->fixture.value << '\n';
      out << "  paper_upper=" << entry.paper->fixture.upper << '\n';
    }
  }
  for (const auto& check : report.table_checks) {
    out << "table " << check.fixture.table << " index=" << check.fixture.index
        << " paper=" << check.fixture.value << " computed=" << check.computed
        << (check.matches ? " match" : " mismatch") << '\n';
  }
  out << "rounding_resolution: "
      << (report.rounding_resolution ? to_string(*report.rounding_resolution) : "none") << '\n';
  const auto& s = report.summary;
  out << "summary: entries=" << s.entries << " bracket_failures=" << s.bracket_failures
      << " consistent_rows_matched=" << s.consistent_rows_matched
      << " consistent_rows_mismatched=" << s.consistent_rows_mismatched
      << " inconsistent_rows_confirmed=" << s.inconsistent_rows_confirmed
      << " inconsistent_rows_matched=" << s.inconsistent_rows_matched
      << " table_mismatches=" << s.table_mismatches << '\n';
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string render_report_json(const VerificationReport& report) {
  Json doc;
  doc["q_range"] = {report.q_min, report.q_max};
  doc["digits"] = report.digits;
  doc["oracle_digits"] = report.oracle_digits;
  Json entries = Json::array();
  for (const auto& entry : report.entries) {
    const auto& r = entry.record;
    Json item;
    item["q"] = r.q;
    item["lambda"] = rational_json(r.lambda);
    item["a_value"] = rational_json(r.a_value);
    item["k_value"] = rational_json(r.k_value);
    item["lower"] = rational_json(r.lower);
    item["upper"] = rational_json(r.upper);
    item["lower_decimal"] = to_decimal(r.lower, report.digits).text;
    item["upper_decimal"] = to_decimal(r.upper, report.digits).text;
    item["oracle_digits"] = entry.oracle_digits;
    item["brackets_pi"] = entry.brackets_pi;
    item["paper_row_match"] = to_string(entry.paper_row_match);
    if (entry.paper) {
      Json paper;
      paper["annotation"] = to_string(entry.paper->fixture.annotation);
      paper["lower"] = entry.paper->fixture.value;
      paper["upper"] = entry.paper->fixture.upper;
      paper["places"] = entry.paper->places;
      Json modes = Json::array();
      for (RoundingMode m : entry.paper->exact_modes) modes.push_back(to_string(m));
      paper["exact_modes"] = std::move(modes);
      paper["ulp_distance"] = entry.paper->ulp_distance.to_string();
      paper["interval_contains_pi"] = entry.paper->paper_interval_contains_pi;
      item["paper"] = std::move(paper);
    }
    entries.push_back(std::move(item));
  }
  doc["entries"] = std::move(entries);
  Json tables = Json::array();
  for (const auto& check : report.table_checks) {
    tables.push_back(Json{{"table", check.fixture.table},
                          {"index", check.fixture.index},
                          {"paper", check.fixture.value},
                          {"computed", check.computed},
                          {"annotation", to_string(check.fixture.annotation)},
                          {"match", check.matches}});
  }
  doc["table_checks"] = std::move(tables);
  doc["rounding_resolution"] =
      report.rounding_resolution ? Json(to_string(*report.rounding_resolution)) : Json(nullptr);
  const auto& s = report.summary;
  doc["summary"] = Json{{"entries", s.entries},
                        {"bracket_failures", s.bracket_failures},
                        {"consistent_rows_matched", s.consistent_rows_matched},
                        {"consistent_rows_mismatched", s.consistent_rows_mismatched},
                        {"inconsistent_rows_confirmed", s.inconsistent_rows_confirmed},
                        {"inconsistent_rows_matched", s.inconsistent_rows_matched},
                        {"table_mismatches", s.table_mismatches},
                        {"passed", report.passed()}};
  return doc.dump(2) + "\n";
}

}  // namespace pibeta
