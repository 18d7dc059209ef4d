#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umtlab/experiments/cells.hpp"

namespace umtlab {

// One aggregated curve point: the cell parameter columns without seed and
// replicate, plus mean, standard error and replicate count.
struct AggregateRow {
  std::string model;
  std::string preset;
  double alpha = 0.0;
  double p = 0.0;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  std::uint64_t t_size = 0;
  std::uint64_t p_size = 0;
  std::uint64_t theta_count = 0;
  std::uint64_t m = 0;
  std::string metric;
  double mean = 0.0;
  double stderr_ = 0.0;  // sample stdev / sqrt(replicates); 0 for a single one
  std::uint64_t replicates = 0;
};

// Groups records by (parameters, checkpoint, metric) in ascending parameter
// order. Every replicate of a parameter combination must contribute exactly
// the same checkpoint/metric set, otherwise AggregationError.
std::vector<AggregateRow> aggregate(const std::vector<CellResult>& cells);

}  // namespace umtlab
