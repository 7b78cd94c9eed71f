#include "pibeta/fixtures.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pibeta/error.hpp"

namespace pibeta {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    fields.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

Consistency parse_consistency(std::string_view text, std::size_t line_no) {
  if (text == "expected_consistent") return Consistency::expected_consistent;
  if (text == "expected_inconsistent") return Consistency::expected_inconsistent;
  throw Error(ErrorCode::parse, "fixtures line " + std::to_string(line_no) + ": unknown annotation '" +
                                    std::string(text) + "'");
}

}  // namespace

const char* to_string(Consistency c) noexcept {
  return c == Consistency::expected_consistent ? "expected_consistent" : "expected_inconsistent";
}

FixtureSet FixtureSet::parse(std::string_view text) {
  std::vector<TableFixture> rows;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw Error(ErrorCode::parse, "fixtures line " + std::to_string(line_no) + ": expected 5 fields, got " +
                                        std::to_string(fields.size()));
    }
    long index = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), index);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      throw Error(ErrorCode::parse, "fixtures line " + std::to_string(line_no) + ": bad index");
    }
    rows.push_back({std::string(fields[0]), index, std::string(fields[2]), std::string(fields[3]),
                    parse_consistency(fields[4], line_no)});
    if (rows.back().table == "bounds" && rows.back().upper.empty()) {
      throw Error(ErrorCode::parse, "fixtures line " + std::to_string(line_no) + ": bounds row needs an upper value");
    }
  }
  return FixtureSet(std::move(rows));
}

FixtureSet FixtureSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::usage, "cannot open fixture file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const FixtureSet& FixtureSet::builtin() {
  static const FixtureSet set = parse(builtin_fixture_text());
  return set;
}

std::optional<TableFixture> FixtureSet::find(std::string_view table, long index) const {
  for (const auto& row : rows_) {
    if (row.table == table && row.index == index) return row;
  }
  return std::nullopt;
}

std::vector<TableFixture> FixtureSet::table(std::string_view table) const {
  std::vector<TableFixture> out;
  for (const auto& row : rows_) {
    if (row.table == table) out.push_back(row);
  }
  return out;
}

}  // namespace pibeta
