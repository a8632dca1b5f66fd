#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ibc::reports {

enum class OutputFormat { Json, Csv, Svg };

/// Throws InvalidParameter for anything but "json", "csv" or "svg".
OutputFormat parse_format(std::string_view name);

/// 17 significant digits, shortest exponent form; round-trips exactly.
std::string format_number(double x);

/// Same, fixed-point with `decimals` digits after the point.
std::string format_fixed(double x, int decimals);

/// A numeric table with a header row. Cells are pre-formatted strings so
/// integer and floating columns can be mixed.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  /// Comma separated, LF line endings, no quoting (cells never contain commas).
  void write_csv(std::ostream& os) const;
  /// Array of objects keyed by header; cells that parse fully as numbers are
  /// emitted as numbers, "true" and "false" as booleans.
  void write_json(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace ibc::reports
