#pragma once

#include <string>
#include <vector>

#include "umtlab/experiments/aggregate.hpp"
#include "umtlab/experiments/cells.hpp"

namespace umtlab {

// Fixed, versioned CSV schemas; column order is part of the contract.
inline constexpr const char* kCellsHeader =
    "model,preset,seed,replicate,alpha,p,r,n,t_size,p_size,theta_count,m,"
    "metric,value";
inline constexpr const char* kAggregateHeader =
    "model,preset,alpha,p,r,n,t_size,p_size,theta_count,m,metric,mean,stderr,"
    "replicates";

// Floating values use 9 significant digits with a '.' decimal point
// regardless of locale.
std::string format_real(double value);

std::string cells_csv(const std::vector<CellResult>& cells);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

// Minimal reader for the files this tool writes: a header line plus
// comma-separated fields with no quoting.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; -1 when absent.
  int column_index(const std::string& name) const;
};

CsvTable read_csv(const std::string& text);

}  // namespace umtlab
