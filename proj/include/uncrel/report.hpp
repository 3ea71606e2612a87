#pragma once

// Tabular documents rendered as CSV or JSON, and the tabulated-density file format.
//
// CSV: '# key=value' metadata lines, one header line, then rows. JSON: an object with
// "metadata", "columns", "rows" (objects keyed by column) and "notes". Numbers carry 12
// significant digits; NaN is written as "nan" in CSV and null in JSON.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uncrel/constants.hpp"
#include "uncrel/densities.hpp"

namespace uncrel::report {

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct ReportDocument {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void add_meta(std::string key, std::string value);
  void add_row(std::vector<Cell> row);

  std::string to_csv() const;
  std::string to_json() const;
};

/// %.12g, with "nan", "inf" and "-inf" spelled out.
std::string format_number(double v);

struct TabulatedFile {
  SystemConfig cfg;
  std::string space = "position";
  std::vector<double> r;
  std::vector<double> rho;
};

/// Parses the tabulated-density CSV. FormatError on malformed lines, missing d= or N=, an
/// unknown space, or r not strictly increasing.
TabulatedFile read_tabulated(std::istream& in);
TabulatedFile read_tabulated_file(const std::string& path);

/// Writes rho sampled uniformly on [0, r_max] in the same format, at full double precision.
void write_tabulated(std::ostream& out, const RadialDensity& rho, const std::string& space, double r_max,
                     int points);

}  // namespace uncrel::report
