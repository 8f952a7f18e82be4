#ifndef HHBOUNDS_CLI_FORMAT_HPP
#define HHBOUNDS_CLI_FORMAT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hhb::cli {

inline constexpr std::string_view kCsvSchemaLine = "# hh-bounds v1";

/// 17 significant digits, '.' decimal point, independent of the global locale.
std::string fmt_double(double v);
std::string fmt_bool(bool v);
std::string fmt_optional(std::optional<int> v);

/// Splits "a,b,c" and trims surrounding blanks; empty items are dropped.
std::vector<std::string> split_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
double parse_double(std::string_view text);

class CsvWriter {
public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns);
  void row(const std::vector<std::string>& cells);

private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace hhb::cli

#endif  // HHBOUNDS_CLI_FORMAT_HPP
