#include "schwarz_tools/table.hpp"

#include "schwarz/errors.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace schwarz::tools {
namespace {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Cell parse_cell(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (!text.empty() && ec == std::errc{} && end == text.data() + text.size()) return v;
  return text;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

} // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const double* d = std::get_if<double>(&row[i])) {
        out += format_double(*d);
      } else {
        out += std::get<std::string>(row[i]);
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) {
        // JSON has no infinities; spell them like the CSV does.
        if (std::isfinite(*d)) {
          obj[table.columns[i]] = *d;
        } else {
          obj[table.columns[i]] = format_double(*d);
        }
      } else {
        obj[table.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::csv ? to_csv(table) : to_json(table);
}

Table parse_csv(std::string_view text) {
  Table table;
  std::stringstream ss{std::string(text)};
  std::string line;
  if (!std::getline(ss, line)) throw InvalidParameter("parse_csv: empty input");
  table.columns = split_line(line);
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != table.columns.size()) throw InvalidParameter("parse_csv: ragged row");
    std::vector<Cell> row;
    for (const auto& f : fields) row.push_back(parse_cell(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table parse_json(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text);
  if (!doc.is_array()) throw InvalidParameter("parse_json: expected an array of rows");
  Table table;
  for (const auto& obj : doc) {
    if (table.columns.empty()) {
      for (const auto& item : obj.items()) table.columns.push_back(item.key());
    }
    std::vector<Cell> row;
    for (const auto& col : table.columns) {
      const auto& v = obj.at(col);
      if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.push_back(parse_cell(v.get<std::string>()));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace schwarz::tools
