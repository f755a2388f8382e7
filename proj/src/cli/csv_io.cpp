#include "sic/cli/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sic/error.hpp"

namespace sic::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

bool skip_line(std::string_view line) { return line.empty() || line.front() == '#'; }

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

ErrorCurve read_curve_csv(std::istream& in, std::string_view source) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<double> values;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (skip_line(line)) continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      if (fields.size() != 2 || fields[0] != "k" || fields[1] != "V") {
        fail(source, line_no, "expected header 'k,V'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 2) fail(source, line_no, "expected two fields 'k,V'");
    std::size_t k = 0;
    const auto [kp, kec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), k);
    if (kec != std::errc() || kp != fields[0].data() + fields[0].size() || fields[0].empty()) {
      fail(source, line_no, "k is not a non-negative integer: '" + std::string(fields[0]) + "'");
    }
    if (k != values.size()) {
      fail(source, line_no, "expected k = " + std::to_string(values.size()) + ", found " +
                                std::to_string(k) + " (k must be contiguous from 0)");
    }
    double v = 0.0;
    if (!parse_double(fields[1], v) || !std::isfinite(v)) {
      fail(source, line_no, "V is not a finite number: '" + std::string(fields[1]) + "'");
    }
    values.push_back(v);
  }
  if (!have_header) throw InputError(std::string(source) + ": missing 'k,V' header");
  if (values.empty()) throw InputError(std::string(source) + ": curve has no rows");
  return ErrorCurve(std::move(values));
}

ErrorCurve read_curve_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_curve_csv(in, path.string());
}

void write_curve_csv(std::ostream& out, const ErrorCurve& curve) {
  out << "k,V\n";
  for (std::size_t k = 0; k < curve.size(); ++k) out << k << ',' << format_double(curve[k]) << '\n';
}

std::size_t NumericTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError("no column named '" + std::string(name) + "'");
}

std::vector<double> NumericTable::column_values(std::size_t index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(index));
  return out;
}

NumericTable read_numeric_table(std::istream& in, std::string_view source) {
  NumericTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (skip_line(line)) continue;
    const auto fields = split_fields(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size() && numeric; ++i) {
      numeric = parse_double(fields[i], row[i]);
    }
    if (first && !numeric) {
      for (auto f : fields) table.header.emplace_back(f);
      first = false;
      continue;
    }
    first = false;
    if (!numeric) fail(source, line_no, "non-numeric field");
    for (double v : row) {
      if (!std::isfinite(v)) fail(source, line_no, "non-finite value");
    }
    const std::size_t width = table.rows.empty() ? (table.header.empty() ? row.size() : table.header.size())
                                                 : table.rows.front().size();
    if (row.size() != width) {
      fail(source, line_no, "expected " + std::to_string(width) + " fields, found " +
                                std::to_string(row.size()));
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw InputError(std::string(source) + ": no data rows");
  return table;
}

NumericTable read_numeric_table_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_numeric_table(in, path.string());
}

}  // namespace sic::cli
