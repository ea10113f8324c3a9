#ifndef UDW_CSV_HPP
#define UDW_CSV_HPP

#include <string>
#include <vector>

namespace udw {

/// Numeric table with `#`-prefixed metadata lines, a header row, and rows of
/// doubles rendered in lowercase scientific notation with 17 significant
/// digits. Emission is canonical: parse + re-emit is byte-identical.
struct CsvTable {
  std::vector<std::string> metadata;  // stored without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// "%.16e" rendering (17 significant digits, lowercase, round-trip exact).
std::string format_value(double v);

std::string to_csv(const CsvTable& table);

/// Inverse of to_csv; throws std::runtime_error on ragged rows or non-numeric
/// fields.
CsvTable parse_csv(const std::string& text);

void write_csv_file(const std::string& path, const CsvTable& table);
CsvTable read_csv_file(const std::string& path);

}  // namespace udw

#endif
