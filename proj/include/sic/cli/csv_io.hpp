#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sic/curve.hpp"

namespace sic::cli {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Reads the `k,V` curve format: header line, rows k = 0..K contiguous, '#' comments.
/// Errors are InputError messages prefixed with "<source>:<line>:".
ErrorCurve read_curve_csv(std::istream& in, std::string_view source = "<input>");
ErrorCurve read_curve_file(const std::filesystem::path& path);

void write_curve_csv(std::ostream& out, const ErrorCurve& curve);

/// Numeric table with an optional header row (detected by a non-numeric first row).
struct NumericTable {
  std::vector<std::string> header;  // empty when the file had none
  std::vector<std::vector<double>> rows;

  std::size_t cols() const noexcept { return rows.empty() ? header.size() : rows.front().size(); }
  /// Index of a named column; throws InputError if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> column_values(std::size_t index) const;
};

NumericTable read_numeric_table(std::istream& in, std::string_view source = "<input>");
NumericTable read_numeric_table_file(const std::filesystem::path& path);

}  // namespace sic::cli
