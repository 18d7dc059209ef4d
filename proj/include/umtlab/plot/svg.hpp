#pragma once

#include <string>

#include "umtlab/experiments/csv.hpp"

namespace umtlab {

// Renders a line chart from an aggregate table: one series per distinct
// value of `series_column`, points at (x_column, y_column), and a translucent
// +-1 stderr band when the table has a "stderr" column. Series with a single
// point degrade to a lone marker. Output is a standalone SVG document whose
// bytes depend only on the table contents. Throws ConfigError when the table
// has no rows or is missing any of the requested columns (the message lists
// them).
std::string render_line_chart(const CsvTable& table,
                              const std::string& x_column,
                              const std::string& y_column,
                              const std::string& series_column);

}  // namespace umtlab
