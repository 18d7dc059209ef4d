#include "umtlab/experiments/csv.hpp"

#include <cstdio>
#include <sstream>

#include "umtlab/error.hpp"

namespace umtlab {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string cells_csv(const std::vector<CellResult>& cells) {
  std::string out = kCellsHeader;
  out += '\n';
  for (const CellResult& cell : cells) {
    for (const CellRecord& record : cell.records) {
      out += model_name(cell.cell.model);
      out += ',';
      out += cell.cell.preset;
      out += ',';
      out += std::to_string(cell.cell.seed);
      out += ',';
      out += std::to_string(cell.cell.replicate);
      out += ',';
      out += format_real(cell.cell.alpha);
      out += ',';
      out += format_real(cell.p);
      out += ',';
      out += std::to_string(cell.cell.r);
      out += ',';
      out += std::to_string(cell.n);
      out += ',';
      out += std::to_string(cell.t_size);
      out += ',';
      out += std::to_string(cell.p_size);
      out += ',';
      out += std::to_string(cell.theta_count);
      out += ',';
      out += std::to_string(record.m);
      out += ',';
      out += record.metric;
      out += ',';
      out += format_real(record.value);
      out += '\n';
    }
  }
  return out;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::string out = kAggregateHeader;
  out += '\n';
  for (const AggregateRow& row : rows) {
    out += row.model;
    out += ',';
    out += row.preset;
    out += ',';
    out += format_real(row.alpha);
    out += ',';
    out += format_real(row.p);
    out += ',';
    out += std::to_string(row.r);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.t_size);
    out += ',';
    out += std::to_string(row.p_size);
    out += ',';
    out += std::to_string(row.theta_count);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += row.metric;
    out += ',';
    out += format_real(row.mean);
    out += ',';
    out += format_real(row.stderr_);
    out += ',';
    out += std::to_string(row.replicates);
    out += '\n';
  }
  return out;
}

int CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable read_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    if (header) {
      table.columns = std::move(fields);
      header = false;
    } else {
      if (fields.size() != table.columns.size()) {
        throw ConfigError("csv: row with " + std::to_string(fields.size()) +
                          " fields under " +
                          std::to_string(table.columns.size()) + " columns");
      }
      table.rows.push_back(std::move(fields));
    }
  }
  if (header) throw ConfigError("csv: missing header line");
  return table;
}

}  // namespace umtlab
