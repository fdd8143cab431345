#include "mpgeom/table.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mpg {

namespace {

bool kind_matches(const Cell &c, CellKind k) {
  switch (k) {
  case CellKind::Integer: return std::holds_alternative<long long>(c);
  case CellKind::Real: return std::holds_alternative<double>(c);
  case CellKind::Complex: return std::holds_alternative<cplx>(c);
  case CellKind::Text: return std::holds_alternative<std::string>(c);
  case CellKind::Boolean: return std::holds_alternative<bool>(c);
  }
  return false;
}

nlohmann::ordered_json json_real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

} // namespace

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("row width does not match the table columns");
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!kind_matches(row[i], columns_[i].kind))
      throw std::invalid_argument("cell type mismatch in column '" + columns_[i].name + "'");
  rows_.push_back(std::move(row));
}

void ResultTable::set_metadata(const std::string &key, const std::string &value) {
  for (auto &kv : metadata_)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  metadata_.emplace_back(key, value);
}

TableFormat parse_table_format(const std::string &name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "jsonl" || name == "json-lines") return TableFormat::JsonLines;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string &field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream &out, const ResultTable &table) {
  bool first = true;
  auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  for (const auto &c : table.columns()) {
    if (c.kind == CellKind::Complex) {
      sep();
      out << csv_quote(c.name + "_re");
      sep();
      out << csv_quote(c.name + "_im");
    } else {
      sep();
      out << csv_quote(c.name);
    }
  }
  out << '\n';
  for (const auto &row : table.rows()) {
    first = true;
    for (const auto &cell : row) {
      std::visit(
          [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, cplx>) {
              sep();
              out << format_real(v.real());
              sep();
              out << format_real(v.imag());
            } else if constexpr (std::is_same_v<T, double>) {
              sep();
              out << format_real(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
              sep();
              out << csv_quote(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              sep();
              out << (v ? "true" : "false");
            } else {
              sep();
              out << v;
            }
          },
          cell);
    }
    out << '\n';
  }
}

void write_jsonl(std::ostream &out, const ResultTable &table) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto &[k, v] : table.metadata()) meta[k] = v;
  out << nlohmann::ordered_json{{"metadata", meta}}.dump() << '\n';
  for (const auto &row : table.rows()) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string &name = table.columns()[i].name;
      std::visit(
          [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, cplx>) {
              obj[name + "_re"] = json_real(v.real());
              obj[name + "_im"] = json_real(v.imag());
            } else if constexpr (std::is_same_v<T, double>) {
              obj[name] = json_real(v);
            } else {
              obj[name] = v;
            }
          },
          row[i]);
    }
    out << obj.dump() << '\n';
  }
}

void write_table(std::ostream &out, const ResultTable &table, TableFormat format) {
  if (format == TableFormat::Csv)
    write_csv(out, table);
  else
    write_jsonl(out, table);
}

} // namespace mpg
