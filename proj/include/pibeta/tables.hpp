#pragma once

#include <string>
#include <string_view>

#include "pibeta/decimal.hpp"

namespace pibeta {

enum class TableKind { a_values, beta_8p1, beta_8p5, bounds };
enum class TableFormat { markdown, csv, json };

/// Table id used in fixture files and JSON output: A_values, beta_8p1, ...
const char* table_id(TableKind kind) noexcept;
/// Accepts the CLI short names (a, beta1, beta2, bounds) and the table ids.
TableKind parse_table_kind(std::string_view text);
/// md | markdown, csv, json
TableFormat parse_table_format(std::string_view text);

struct TableRequest {
  TableKind kind = TableKind::a_values;
  long from = 1;
  long to = 5;
  TableFormat format = TableFormat::csv;
  /// Decimal places for the bounds table.
  unsigned long digits = 34;
  RoundingMode mode = RoundingMode::truncate;
  unsigned threads = 1;
  /// Largest permitted index.
  long max_index = 1000;
};

/// Renders rows from..to of one table. The A_values and beta tables hold exact
/// fractions; the bounds table holds decimal renderings at `digits` places
/// (plus exact endpoints in JSON). Output is byte-identical for identical
/// requests whatever the thread count. Throws Error(usage) for an empty,
/// inverted or out-of-range interval.
std::string emit_table(const TableRequest& request);

}  // namespace pibeta
