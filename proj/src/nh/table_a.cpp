#include "fqdiff/table_a.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fqdiff {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_field(std::string_view text, std::size_t line_no) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError,
                "table-a line " + std::to_string(line_no) + ": bad field '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

const TableA& TableA::builtin() {
  static const TableA table{{
      {11, 1, 5},   {11, 1, -5},  {19, 1, 2},   {19, 1, -2},  {23, 1, 4},   {23, 1, -4},
      {31, 1, 10},  {31, 1, -10}, {31, 1, 13},  {31, 1, -13}, {47, 1, 11},  {47, 1, -11},
      {59, 1, 15},  {59, 1, -15}, {71, 1, 13},  {71, 1, -13}, {83, 1, 4},   {83, 1, -4},
      {83, 1, 38},  {83, 1, -38}, {151, 1, 22}, {151, 1, -22},
  }};
  return table;
}

TableA TableA::parse_csv(std::string_view text) {
  std::vector<TableARow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#' || line == "p,n,u") continue;

    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "table-a line " + std::to_string(line_no) + ": expected p,n,u");
    }
    TableARow row;
    row.p = parse_field<std::uint32_t>(line.substr(0, c1), line_no);
    row.n = parse_field<std::uint32_t>(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    row.u = parse_field<std::int64_t>(line.substr(c2 + 1), line_no);
    rows.push_back(row);
  }
  return TableA{std::move(rows)};
}

TableA TableA::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open table-a file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

bool TableA::covers(std::uint32_t p, std::uint32_t n) const noexcept {
  return std::ranges::any_of(rows_, [&](const TableARow& r) { return r.p == p && r.n == n; });
}

bool TableA::contains(const FieldCtx& ctx, Elem u) const {
  return std::ranges::any_of(rows_, [&](const TableARow& r) {
    return r.p == ctx.p() && r.n == ctx.n() && ctx.embed_int(r.u) == u;
  });
}

std::vector<Elem> TableA::members(const FieldCtx& ctx) const {
  std::vector<Elem> out;
  for (const auto& r : rows_) {
    if (r.p == ctx.p() && r.n == ctx.n()) out.push_back(ctx.embed_int(r.u));
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fqdiff
