#include "pibeta/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pibeta/decimal.hpp"
#include "pibeta/error.hpp"
#include "pibeta/pi_bounds.hpp"
#include "pibeta/tables.hpp"
#include "pibeta/verify.hpp"

namespace pibeta {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator().to_string()}, {"den", r.denominator().to_string()}};
}

void require_q(long q, long max_q, const char* flag) {
  if (q < 1) throw Error(ErrorCode::usage, std::string(flag) + " must be >= 1");
  if (q > max_q) {
    throw Error(ErrorCode::usage, std::string(flag) + " " + std::to_string(q) + " exceeds PIBETA_MAX_Q=" +
                                      std::to_string(max_q));
  }
}

struct BoundsArgs {
  long q = 1;
  unsigned long digits = 34;
  std::string mode = "truncate";
  std::string format = "text";
};

struct TableArgs {
  std::string which = "a";
  long from = 1;
  long to = 5;
  std::string format = "csv";
  unsigned long digits = 34;
  std::string mode = "truncate";
  unsigned threads = 1;
};

struct VerifyArgs {
  long q_max = 11;
  std::optional<unsigned long> digits;
  std::string format = "text";
  std::string fixtures;
  unsigned threads = 1;
};

struct HyperArgs {
  long q = 1;
  std::optional<std::size_t> terms;
  std::optional<unsigned long> digits;
  std::string format = "text";
};

int run_bounds(const BoundsArgs& args, long max_q, std::ostream& out) {
  require_q(args.q, max_q, "--q");
  if (args.format != "text" && args.format != "json") throw Error(ErrorCode::usage, "unknown format '" + args.format + "'");
  const RoundingMode mode = parse_rounding_mode(args.mode);
  const ApproximationRecord r = compute_bounds(args.q);
  const Rational width = r.width();
  const std::string lower = to_decimal(r.lower, args.digits, mode).text;
  const std::string upper = to_decimal(r.upper, args.digits, mode).text;

  if (args.format == "json") {
    Json doc{{"q", r.q},
             {"lambda", rational_json(r.lambda)},
             {"a_value", rational_json(r.a_value)},
             {"k_value", rational_json(r.k_value)},
             {"lower", rational_json(r.lower)},
             {"upper", rational_json(r.upper)},
             {"width", rational_json(width)},
             {"digits", args.digits},
             {"mode", to_string(mode)},
             {"lower_decimal", lower},
             {"upper_decimal", upper}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "q: " << r.q << '\n'
      << "lambda: " << r.lambda << '\n'
      << "A: " << r.a_value << '\n'
      << "K: " << r.k_value << '\n'
      << "lower: " << r.lower << '\n'
      << "upper: " << r.upper << '\n'
      << "width: " << width << '\n'
      << "lower_decimal: " << lower << '\n'
      << "upper_decimal: " << upper << '\n'
      << "digits: " << args.digits << " mode: " << to_string(mode) << '\n';
  return kExitOk;
}

int run_table(const TableArgs& args, long max_q, std::ostream& out) {
  TableRequest request;
  request.kind = parse_table_kind(args.which);
  request.from = args.from;
  request.to = args.to;
  request.format = parse_table_format(args.format);
  request.digits = args.digits;
  request.mode = parse_rounding_mode(args.mode);
  request.threads = args.threads;
  request.max_index = max_q;
  out << emit_table(request);
  return kExitOk;
}

int run_verify(const VerifyArgs& args, long max_q, std::ostream& out, std::ostream& err) {
  require_q(args.q_max, max_q, "--q-max");
  if (args.format != "text" && args.format != "json") throw Error(ErrorCode::usage, "unknown format '" + args.format + "'");
  const FixtureSet fixtures = args.fixtures.empty() ? FixtureSet::builtin() : FixtureSet::load(args.fixtures);
  VerifyOptions options;
  options.q_max = args.q_max;
  options.digits = args.digits;
  options.threads = args.threads;
  const VerificationReport report = verify_report(options, fixtures);
  out << (args.format == "json" ? render_report_json(report) : render_report_text(report));
  if (!report.passed()) err << "pibeta: verification failed\n";
  return report.exit_code();
}

int run_hyper(const HyperArgs& args, long max_q, std::ostream& out) {
  require_q(args.q, max_q, "--q");
  if (args.format != "text" && args.format != "json") throw Error(ErrorCode::usage, "unknown format '" + args.format + "'");
  const HypergeomCertificate cert = hypergeom_bracket(args.q, args.terms);
  const ApproximationRecord record = compute_bounds(args.q);
  // The sandwich λ𝒦/2 .. λ𝒦 on 𝒜_q − π, ordered by the sign of λ.
  Rational s1 = record.lambda * record.k_value / Rational(2);
  Rational s2 = record.lambda * record.k_value;
  if (s2 < s1) std::swap(s1, s2);
  const bool within = s1 <= cert.bracket_low && cert.bracket_high <= s2;
  const unsigned long digits = args.digits.value_or(decimal_order(cert.width()) + 5);

  if (args.format == "json") {
    Json doc{{"q", cert.q},
             {"prefactor", rational_json(cert.prefactor)},
             {"n_terms", cert.n_terms},
             {"bracket_low", rational_json(cert.bracket_low)},
             {"bracket_high", rational_json(cert.bracket_high)},
             {"digits", digits},
             {"bracket_low_decimal", to_decimal(cert.bracket_low, digits).text},
             {"bracket_high_decimal", to_decimal(cert.bracket_high, digits).text},
             {"sandwich_low", rational_json(s1)},
             {"sandwich_high", rational_json(s2)},
             {"within_sandwich", within}};
    out << doc.dump(2) << '\n';
  } else {
    out << "q: " << cert.q << '\n'
        << "prefactor: " << cert.prefactor << '\n'
        << "n_terms: " << cert.n_terms << '\n'
        << "bracket_low: " << to_decimal(cert.bracket_low, digits).text << '\n'
        << "bracket_high: " << to_decimal(cert.bracket_high, digits).text << '\n'
        << "sandwich_low: " << to_decimal(s1, digits).text << '\n'
        << "sandwich_high: " << to_decimal(s2, digits).text << '\n'
        << "within_sandwich: " << (within ? "true" : "false") << '\n';
  }
  return within ? kExitOk : kExitVerificationFailed;
}

}  // namespace

long max_q_from_environment() {
  const char* raw = std::getenv("PIBETA_MAX_Q");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxQ;
  std::string_view text(raw);
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::usage, "PIBETA_MAX_Q must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified rational bounds on pi from Beta-function integrals", "pibeta"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bracketing interval for one q");
  bounds_cmd->add_option("--q", bounds.q, "Polynomial index q >= 1")->required();
  bounds_cmd->add_option("--digits", bounds.digits, "Decimal places")->capture_default_str();
  bounds_cmd->add_option("--mode", bounds.mode, "truncate | round")->capture_default_str();
  bounds_cmd->add_option("--format", bounds.format, "text | json")->capture_default_str();

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Reproduce one of the published tables");
  table_cmd->add_option("--which", table.which, "a | beta1 | beta2 | bounds")->required();
  table_cmd->add_option("--from", table.from, "First row index")->capture_default_str();
  table_cmd->add_option("--to", table.to, "Last row index")->capture_default_str();
  table_cmd->add_option("--format", table.format, "md | csv | json")->capture_default_str();
  table_cmd->add_option("--digits", table.digits, "Decimal places for the bounds table")->capture_default_str();
  table_cmd->add_option("--mode", table.mode, "truncate | round")->capture_default_str();
  table_cmd->add_option("--threads", table.threads, "Worker threads")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check bracketing against an independent pi and the published rows");
  verify_cmd->add_option("--q-max", verify.q_max, "Check q = 1..q-max")->capture_default_str();
  verify_cmd->add_option("--digits", verify.digits, "Comparison places (>= 35, default: as needed)");
  verify_cmd->add_option("--format", verify.format, "text | json")->capture_default_str();
  verify_cmd->add_option("--fixtures", verify.fixtures, "Fixture CSV replacing the built-in tables");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();

  HyperArgs hyper;
  auto* hyper_cmd = app.add_subcommand("hyper", "Hypergeometric bracket of A_q - pi");
  hyper_cmd->add_option("--q", hyper.q, "Polynomial index q >= 1")->required();
  hyper_cmd->add_option("--terms", hyper.terms, "Series terms (>= 2, default: as needed)");
  hyper_cmd->add_option("--digits", hyper.digits, "Decimal places in the text output");
  hyper_cmd->add_option("--format", hyper.format, "text | json")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pibeta: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const long max_q = max_q_from_environment();
    if (bounds_cmd->parsed()) return run_bounds(bounds, max_q, out);
    if (table_cmd->parsed()) return run_table(table, max_q, out);
    if (verify_cmd->parsed()) return run_verify(verify, max_q, out, err);
    if (hyper_cmd->parsed()) return run_hyper(hyper, max_q, out);
  } catch (const Error& e) {
    err << "pibeta: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::internal_consistency ? kExitVerificationFailed : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pibeta
