#include <charconv>

#include "json.hpp"

#include "wreath/cli.hpp"

namespace wreath::cli {

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Booleans, empty cells, 64-bit integers and plain decimals become JSON
// scalars. Anything else, including exact integers beyond 64 bits, stays a
// string so no digits are lost.
nlohmann::ordered_json json_cell(const std::string& cell) {
  if (cell.empty()) return nullptr;
  if (cell == "true") return true;
  if (cell == "false") return false;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const std::size_t digits_from = cell[0] == '-' ? 1 : 0;
  const std::size_t dot = cell.find('.');
  const bool leading_zero = cell.size() > digits_from + 1 && cell[digits_from] == '0' && dot != digits_from + 1;
  if (leading_zero || cell == "-0") return cell;
  if (dot == std::string::npos) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc() && ptr == end) return value;
    return cell;
  }
  const bool plain = cell.find_first_not_of("-0123456789.") == std::string::npos && dot > digits_from &&
                     dot + 1 < cell.size() && cell.find('.', dot + 1) == std::string::npos &&
                     cell.find('-', 1) == std::string::npos;
  if (plain) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc() && ptr == end) return value;
  }
  return cell;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  for (const auto& note : table.notes) out += "# " + note + '\n';
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"];
  meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata) meta[k] = json_cell(v);
  doc["columns"] = table.columns;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = json_cell(row.at(i));
    rows.push_back(std::move(obj));
  }
  doc["notes"] = table.notes;
  return doc.dump(2) + '\n';
}

}  // namespace wreath::cli
