#include "uncrel/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "uncrel/errors.hpp"

namespace uncrel::report {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::stod(format_number(v));
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

double parse_double(const std::string& text, const std::string& what, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(line) + ": cannot parse " + what + " '" + text + "'");
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void ReportDocument::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void ReportDocument::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw FormatError("report row width does not match the column count");
  rows.push_back(std::move(row));
}

std::string ReportDocument::to_csv() const {
  std::ostringstream os;
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  for (const auto& n : notes) os << "# note: " << n << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string ReportDocument::to_json() const {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  doc["columns"] = columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  doc["notes"] = notes;
  return doc.dump(2) + "\n";
}

TabulatedFile read_tabulated(std::istream& in) {
  TabulatedFile out;
  bool have_d = false;
  bool have_n = false;
  bool have_header = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text[0] == '#') {
      const std::string body = trim(text.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(body.substr(0, eq));
      const std::string value = trim(body.substr(eq + 1));
      if (key == "d") {
        const double d = parse_double(value, "d", line);
        if (d != std::floor(d) || d < 1) throw FormatError("line " + std::to_string(line) + ": d must be a positive integer");
        out.cfg.d = static_cast<int>(d);
        have_d = true;
      } else if (key == "N") {
        out.cfg.N = parse_double(value, "N", line);
        have_n = true;
      } else if (key == "space") {
        if (value != "position" && value != "momentum") {
          throw FormatError("line " + std::to_string(line) + ": space must be position or momentum");
        }
        out.space = value;
      }
      continue;
    }
    if (!have_header) {
      if (text != "r,rho") throw FormatError("line " + std::to_string(line) + ": expected header 'r,rho'");
      have_header = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
      throw FormatError("line " + std::to_string(line) + ": expected two columns");
    }
    const double r = parse_double(trim(text.substr(0, comma)), "r", line);
    const double rho = parse_double(trim(text.substr(comma + 1)), "rho", line);
    if (!out.r.empty() && !(r > out.r.back())) {
      throw FormatError("line " + std::to_string(line) + ": r must be strictly increasing");
    }
    out.r.push_back(r);
    out.rho.push_back(rho);
  }
  if (!have_d || !have_n) throw FormatError("tabulated density: header must declare d= and N=");
  if (!have_header) throw FormatError("tabulated density: missing 'r,rho' header");
  return out;
}

TabulatedFile read_tabulated_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_tabulated(in);
}

void write_tabulated(std::ostream& out, const RadialDensity& rho, const std::string& space, double r_max,
                     int points) {
  if (space != "position" && space != "momentum") throw FormatError("space must be position or momentum");
  out << "# d=" << rho.dimension() << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rho.particle_count());
  out << "# N=" << buf << '\n';
  out << "# space=" << space << '\n';
  out << "r,rho\n";
  for (const auto& [r, v] : densities::sample(rho, r_max, points)) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", r, v);
    out << buf << '\n';
  }
}

}  // namespace uncrel::report
