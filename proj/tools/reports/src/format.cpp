#include "ibc/reports/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "ibc/errors.hpp"

namespace ibc::reports {

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "svg") return OutputFormat::Svg;
  throw InvalidParameter("unknown format '" + std::string(name) + "' (json, csv, svg)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double x, int decimals) {
  std::array<char, 512> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::fixed, decimals);
  if (res.ec != std::errc{}) return format_number(x);
  std::string s(buf.data(), res.ptr);
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    if (s.front() == '-') s.erase(0, 1);  // no negative zero in output
  }
  return s;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw InvalidParameter("Table: empty header");
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw DimensionError("Table: row width mismatch");
  rows_.push_back(std::move(cells));
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

nlohmann::ordered_json cell_value(const std::string& cell) {
  if (cell == "true") return true;
  if (cell == "false") return false;
  double v = 0.0;
  const char* end = cell.data() + cell.size();
  const auto res = std::from_chars(cell.data(), end, v);
  if (res.ec == std::errc{} && res.ptr == end && std::isfinite(v)) {
    if (cell.find_first_of(".eE") == std::string::npos) {
      long long i = 0;
      const auto ires = std::from_chars(cell.data(), end, i);
      if (ires.ec == std::errc{} && ires.ptr == end) return i;
    }
    return v;
  }
  return cell;
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  write_line(os, header_);
  for (const auto& row : rows_) write_line(os, row);
}

void Table::write_json(std::ostream& os) const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < header_.size(); ++i) obj[header_[i]] = cell_value(row[i]);
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

}  // namespace ibc::reports
