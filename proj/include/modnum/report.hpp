#pragma once

// Command reports. A report is a list of named tables whose cells are JSON
// scalars; text, JSON and CSV are three renderings of the same cells, so the
// numeric content cannot drift between formats. Integers that can outgrow
// 64 bits (everything polynomial in the inputs) are stored as decimal strings.

#include "modnum/arith.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modnum {

inline constexpr std::string_view kReportFormat = "moduli-numerics/1";

using Json = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  Table& add_row(std::vector<Json> row) {
    if (row.size() != columns.size()) {
      throw std::logic_error("Table " + name + ": row width mismatch");
    }
    rows.push_back(std::move(row));
    return *this;
  }

  friend bool operator==(const Table&, const Table&) = default;
};

struct Report {
  std::string format{kReportFormat};
  std::string command;
  Json input = Json::object();
  std::deque<Table> tables;  // deque: table() references stay valid

  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
  }

  const Table* find(std::string_view name) const {
    for (const auto& t : tables)
      if (t.name == name) return &t;
    return nullptr;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline Json cell(const BigInt& v) { return v.str(); }
inline Json cell(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Report& r) {
  Json result = Json::object();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    Json entry = Json::object();
    entry["columns"] = t.columns;
    entry["rows"] = std::move(rows);
    result[t.name] = std::move(entry);
  }
  Json j = Json::object();
  j["format"] = r.format;
  j["command"] = r.command;
  j["input"] = r.input;
  j["result"] = std::move(result);
  return j;
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.format = j.at("format").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input");
  for (const auto& [name, entry] : j.at("result").items()) {
    Table t;
    t.name = name;
    t.columns = entry.at("columns").get<std::vector<std::string>>();
    for (const auto& obj : entry.at("rows")) {
      std::vector<Json> row;
      for (const auto& col : t.columns) row.push_back(obj.at(col));
      t.rows.push_back(std::move(row));
    }
    r.tables.push_back(std::move(t));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text and CSV

inline std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

inline void render_text(const Report& r, std::ostream& os) {
  os << r.command;
  for (const auto& [k, v] : r.input.items()) os << "  " << k << "=" << plain(v);
  os << "\n";
  for (const auto& t : r.tables) {
    os << "\n[" << t.name << "]\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], plain(row[i]).size());
    auto line = [&](auto&& get) {
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const std::string s = get(i);
        os << (i ? "  " : "") << s;
        if (i + 1 < t.columns.size()) os << std::string(width[i] - s.size(), ' ');
      }
      os << "\n";
    };
    line([&](std::size_t i) { return t.columns[i]; });
    for (const auto& row : t.rows) line([&](std::size_t i) { return plain(row[i]); });
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// One block per table: a header row led by "table", then the rows; blocks
/// are separated by a blank line.
inline void render_csv(const Report& r, std::ostream& os) {
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) os << "\n";
    first = false;
    os << "table";
    for (const auto& c : t.columns) os << "," << csv_field(c);
    os << "\n";
    for (const auto& row : t.rows) {
      os << csv_field(t.name);
      for (const auto& v : row) os << "," << csv_field(plain(v));
      os << "\n";
    }
  }
}

enum class OutputFormat { text, json, csv };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return std::nullopt;
}

inline std::string render(const Report& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::text: render_text(r, os); break;
    case OutputFormat::json: os << to_json(r).dump(2) << "\n"; break;
    case OutputFormat::csv: render_csv(r, os); break;
  }
  return os.str();
}

}  // namespace modnum
