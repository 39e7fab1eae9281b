#pragma once

// Row-oriented tables written as CSV (17 significant digits) or as a JSON
// array of objects with the same field names.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace schwarz::tools {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

enum class Format { csv, json };

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Cells that parse completely as numbers become doubles.
Table parse_csv(std::string_view text);
Table parse_json(std::string_view text);

} // namespace schwarz::tools
