#include "qwalk/record.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {

void ExperimentRecord::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void ExperimentRecord::add_meta(std::string key, double value) {
  add_meta(std::move(key), format_double(value));
}

void ExperimentRecord::add_meta(std::string key, std::int64_t value) {
  add_meta(std::move(key), std::to_string(value));
}

void ExperimentRecord::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width " + std::to_string(row.size()) + " != " +
                                std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string ExperimentRecord::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return csv_escape(std::get<std::string>(c));
}

std::string strip_newlines(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::string to_csv(const ExperimentRecord& rec) {
  std::string out;
  out += "# ";
  out += kRecordSchema;
  out += " experiment=" + rec.experiment + "\n";
  for (const auto& [k, v] : rec.metadata) out += "# " + k + "=" + strip_newlines(v) + "\n";
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(rec.columns[i]);
  }
  out += '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentRecord& rec) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema"] = kRecordSchema;
  doc["experiment"] = rec.experiment;
  json meta = json::object();
  for (const auto& [k, v] : rec.metadata) meta[k] = v;
  doc["metadata"] = std::move(meta);
  doc["columns"] = rec.columns;
  json rows = json::array();
  for (const auto& row : rec.rows) {
    json r = json::array();
    for (const auto& c : row) {
      if (const auto* i = std::get_if<std::int64_t>(&c)) {
        r.push_back(*i);
      } else if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) {
          r.push_back(*d);
        } else {
          r.push_back(format_double(*d));
        }
      } else {
        r.push_back(std::get<std::string>(c));
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::string render(const ExperimentRecord& rec, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(rec) : to_json(rec);
}

}  // namespace qwalk
