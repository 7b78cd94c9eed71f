#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pibeta {

enum class Consistency { expected_consistent, expected_inconsistent };

const char* to_string(Consistency c) noexcept;

/// One published table row.
struct TableFixture {
  std::string table;  // A_values, beta_8p1, beta_8p5 or bounds
  long index;
  std::string value;  // exact fraction, or the lower bound for `bounds`
  std::string upper;  // upper bound for `bounds`, empty otherwise
  Consistency annotation;
};

class FixtureSet {
 public:
  FixtureSet() = default;
  explicit FixtureSet(std::vector<TableFixture> rows) : rows_(std::move(rows)) {}

  /// Parses the CSV fixture format: `table,index,value,upper,annotation`, with
  /// '#' comment lines. Throws Error(parse).
  static FixtureSet parse(std::string_view text);
  static FixtureSet load(const std::string& path);
  /// The copy compiled into the library from data/published_tables.csv.
  static const FixtureSet& builtin();

  [[nodiscard]] const std::vector<TableFixture>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::optional<TableFixture> find(std::string_view table, long index) const;
  [[nodiscard]] std::vector<TableFixture> table(std::string_view table) const;

 private:
  std::vector<TableFixture> rows_;
};

/// Raw text of data/published_tables.csv.
std::string_view builtin_fixture_text() noexcept;

}  // namespace pibeta
