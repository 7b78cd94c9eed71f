#include "pibeta/tables.hpp"

#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "pibeta/error.hpp"
#include "pibeta/parallel.hpp"
#include "pibeta/pi_bounds.hpp"
#include "pibeta/special_values.hpp"

namespace pibeta {

namespace {

using Json = nlohmann::ordered_json;

struct Row {
  long index;
  Rational value;  // unused for bounds
  Rational lower;
  Rational upper;
};

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator().to_string()}, {"den", r.denominator().to_string()}};
}

const char* index_name(TableKind kind) { return kind == TableKind::bounds ? "q" : "p"; }

const char* value_column(TableKind kind) {
  switch (kind) {
    case TableKind::a_values: return "A_p";
    case TableKind::beta_8p1: return "B(8p+1,8p+1)";
    case TableKind::beta_8p5: return "B(8p+5,8p+5)";
    case TableKind::bounds: return "";
  }
  return "";
}

const char* csv_value_column(TableKind kind) {
  switch (kind) {
    case TableKind::a_values: return "A_p";
    case TableKind::beta_8p1: return "beta_8p1";
    case TableKind::beta_8p5: return "beta_8p5";
    case TableKind::bounds: return "";
  }
  return "";
}

Row compute_row(TableKind kind, long index) {
  switch (kind) {
    case TableKind::a_values: return {index, compute_A(index), {}, {}};
    case TableKind::beta_8p1: return {index, beta_int(8 * index + 1, 8 * index + 1).value, {}, {}};
    case TableKind::beta_8p5: return {index, beta_int(8 * index + 5, 8 * index + 5).value, {}, {}};
    case TableKind::bounds: {
      ApproximationRecord record = compute_bounds(index);
      return {index, {}, std::move(record.lower), std::move(record.upper)};
    }
  }
  throw Error(ErrorCode::internal_consistency, "unknown table kind");
}

std::string render_csv(const TableRequest& request, const std::vector<Row>& rows) {
  std::ostringstream out;
  if (request.kind == TableKind::bounds) {
    out << "q,lower,upper\n";
    for (const auto& row : rows) {
      out << row.index << ',' << to_decimal(row.lower, request.digits, request.mode).text << ','
          << to_decimal(row.upper, request.digits, request.mode).text << '\n';
    }
  } else {
    out << "p," << csv_value_column(request.kind) << '\n';
    for (const auto& row : rows) out << row.index << ',' << row.value.to_string() << '\n';
  }
  return out.str();
}

std::string render_markdown(const TableRequest& request, const std::vector<Row>& rows) {
  std::ostringstream out;
  if (request.kind == TableKind::bounds) {
    out << "| q | Lower bound | Upper bound |\n|---|---|---|\n";
    for (const auto& row : rows) {
      out << "| " << row.index << " | " << to_decimal(row.lower, request.digits, request.mode).text << " | "
          << to_decimal(row.upper, request.digits, request.mode).text << " |\n";
    }
  } else {
    out << "| p | " << value_column(request.kind) << " |\n|---|---|\n";
    for (const auto& row : rows) out << "| " << row.index << " | " << row.value.to_string() << " |\n";
  }
  return out.str();
}

std::string render_json(const TableRequest& request, const std::vector<Row>& rows) {
  Json doc;
  doc["table"] = table_id(request.kind);
  if (request.kind == TableKind::bounds) {
    doc["digits"] = request.digits;
    doc["mode"] = to_string(request.mode);
  }
  Json items = Json::array();
  for (const auto& row : rows) {
    Json item;
    item[index_name(request.kind)] = row.index;
    if (request.kind == TableKind::bounds) {
      item["lower"] = rational_json(row.lower);
      item["upper"] = rational_json(row.upper);
      item["lower_decimal"] = to_decimal(row.lower, request.digits, request.mode).text;
      item["upper_decimal"] = to_decimal(row.upper, request.digits, request.mode).text;
    } else {
      if (request.kind != TableKind::a_values) {
        long arg = 8 * row.index + (request.kind == TableKind::beta_8p1 ? 1 : 5);
        item["r"] = arg;
        item["s"] = arg;
      }
      item["value"] = rational_json(row.value);
    }
    items.push_back(std::move(item));
  }
  doc["rows"] = std::move(items);
  return doc.dump(2) + "\n";
}

}  // namespace

const char* table_id(TableKind kind) noexcept {
  switch (kind) {
    case TableKind::a_values: return "A_values";
    case TableKind::beta_8p1: return "beta_8p1";
    case TableKind::beta_8p5: return "beta_8p5";
    case TableKind::bounds: return "bounds";
  }
  return "unknown";
}

TableKind parse_table_kind(std::string_view text) {
  if (text == "a" || text == "A_values") return TableKind::a_values;
  if (text == "beta1" || text == "beta_8p1") return TableKind::beta_8p1;
  if (text == "beta2" || text == "beta_8p5") return TableKind::beta_8p5;
  if (text == "bounds") return TableKind::bounds;
  throw Error(ErrorCode::usage, "unknown table '" + std::string(text) + "' (expected a, beta1, beta2 or bounds)");
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  throw Error(ErrorCode::usage, "unknown format '" + std::string(text) + "' (expected md, csv or json)");
}

std::string emit_table(const TableRequest& request) {
  if (request.from > request.to) {
    throw Error(ErrorCode::usage, "empty range " + std::to_string(request.from) + ".." + std::to_string(request.to));
  }
  if (request.from < 1 || request.to > request.max_index) {
    throw Error(ErrorCode::usage, "range must lie within 1.." + std::to_string(request.max_index));
  }
  const auto count = static_cast<std::size_t>(request.to - request.from + 1);
  std::vector<Row> rows = parallel_map(count, request.threads, [&](std::size_t i) {
    return compute_row(request.kind, request.from + static_cast<long>(i));
  });

  switch (request.format) {
    case TableFormat::markdown: return render_markdown(request, rows);
    case TableFormat::csv: return render_csv(request, rows);
    case TableFormat::json: return render_json(request, rows);
  }
  throw Error(ErrorCode::internal_consistency, "unknown table format");
}

}  // namespace pibeta
