#pragma once

// The finite exception set of (p, n, u) where f_u has differential uniformity 3
// although u lies in U_0 \ {0, +-1, +-4/5}. Stored one row per sign.

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "fqdiff/field.hpp"

namespace fqdiff {

struct TableARow {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::int64_t u = 0;

  friend bool operator==(const TableARow&, const TableARow&) = default;
};

class TableA {
 public:
  TableA() = default;
  explicit TableA(std::vector<TableARow> rows) : rows_(std::move(rows)) {}

  // Compiled-in copy of resources/table_a.csv.
  static const TableA& builtin();

  // "p,n,u" rows; '#' comments and a "p,n,u" header line are skipped. ParseError on bad rows.
  static TableA parse_csv(std::string_view text);
  static TableA load_csv(const std::filesystem::path& path);

  const std::vector<TableARow>& rows() const noexcept { return rows_; }
  bool covers(std::uint32_t p, std::uint32_t n) const noexcept;
  bool contains(const FieldCtx& ctx, Elem u) const;
  // Members for this field, sorted by enumeration order, duplicates removed.
  std::vector<Elem> members(const FieldCtx& ctx) const;

 private:
  std::vector<TableARow> rows_;
};

}  // namespace fqdiff
