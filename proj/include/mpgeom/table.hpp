#pragma once

#include "mpgeom/cvec.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mpg {

enum class CellKind { Integer, Real, Complex, Text, Boolean };

struct Column {
  std::string name;
  CellKind kind;
};

using Cell = std::variant<long long, double, cplx, std::string, bool>;

//! Rectangular result set. Complex columns serialize as name_re/name_im.
class ResultTable {
public:
  ResultTable() = default;
  explicit ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

  // Throws std::invalid_argument on width or kind mismatch.
  void add_row(std::vector<Cell> row);
  void set_metadata(const std::string &key, const std::string &value);

  const std::vector<Column> &columns() const { return columns_; }
  const std::vector<std::vector<Cell>> &rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>> &metadata() const {
    return metadata_;
  }

private:
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

enum class TableFormat { Csv, JsonLines };

TableFormat parse_table_format(const std::string &name);

// 17 significant digits; RFC 4180 quoting for text cells.
void write_csv(std::ostream &out, const ResultTable &table);
// Leading {"metadata": {...}} object, then one object per row.
void write_jsonl(std::ostream &out, const ResultTable &table);
void write_table(std::ostream &out, const ResultTable &table, TableFormat format);

std::string format_real(double v);
std::string csv_quote(const std::string &field);

} // namespace mpg
