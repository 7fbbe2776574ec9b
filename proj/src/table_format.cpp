#include "cyclebetti/table_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string text(const GradedBettiTable& table) {
  const int pd = table.pd();
  const int low = table.min_row();
  const int high = table.reg();
  const auto columns = static_cast<std::size_t>(pd + 1);

  std::vector<std::string> labels{""};
  std::vector<std::vector<std::string>> cells{{}};
  for (int i = 0; i <= pd; ++i) cells[0].push_back(std::to_string(i));
  labels.push_back("total:");
  cells.emplace_back();
  for (int i = 0; i <= pd; ++i) cells.back().push_back(table.total(i).str());
  for (int row = low; row <= high; ++row) {
    labels.push_back(std::to_string(row) + ":");
    cells.emplace_back();
    for (int i = 0; i <= pd; ++i) {
      const BigInt v = table.at(i, i + row);
      cells.back().push_back(v == 0 ? "." : v.str());
    }
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(columns, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < columns; ++c) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = pad_left(labels[r], label_width);
    for (std::size_t c = 0; c < columns; ++c) line += " " + pad_left(cells[r][c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << "pd: " << pd << '\n' << "reg: " << high << '\n';
  return out.str();
}

std::string json(const GradedBettiTable& table, const TableContext& context) {
  nlohmann::ordered_json doc;
  doc["ambient"] = context.ambient;
  if (context.characteristic) doc["char"] = *context.characteristic;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["value"] = value.str();
    doc["entries"].push_back(std::move(entry));
  }
  doc["pd"] = table.pd();
  doc["reg"] = table.reg();
  return doc.dump() + "\n";
}

std::string csv(const GradedBettiTable& table) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (const auto& [key, value] : table.entries()) out << key.first << ',' << key.second << ',' << value.str() << '\n';
  return out.str();
}

}  // namespace

std::string emit_betti_table(const GradedBettiTable& table, TableFormat format, const TableContext& context) {
  if (table.empty()) throw InvalidParameter("refusing to print an empty Betti table");
  switch (format) {
    case TableFormat::Text: return text(table);
    case TableFormat::Json: return json(table, context);
    case TableFormat::Csv: return csv(table);
  }
  throw InternalFault("unknown table format");
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "text") return TableFormat::Text;
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  throw InvalidParameter("unknown format '" + name + "' (text, json, csv)");
}

}  // namespace cyclebetti
