#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umtlab/experiments/config.hpp"

namespace umtlab {

// One grid point: model parameters plus a replicate index. The seed is
// derived from the master seed and the canonical descriptor alone, so cell
// order and worker schedule never affect any result.
struct ExperimentCell {
  ModelKind model = ModelKind::kKg;
  std::string preset;
  double alpha = 0.0;
  std::uint64_t r = 0;  // kg source size; unused elsewhere
  std::uint64_t replicate = 0;
  std::uint64_t seed = 0;

  std::string descriptor() const;
};

struct CellRecord {
  std::uint64_t m = 0;  // checkpoint; 0 marks the exhaustive full pass
  std::string metric;
  double value = 0.0;
};

struct CellResult {
  ExperimentCell cell;
  // Fixed CSV parameter columns (zero when not meaningful for the model).
  double p = 0.0;
  std::uint64_t n = 0;
  std::uint64_t t_size = 0;
  std::uint64_t p_size = 0;
  std::uint64_t theta_count = 0;
  std::vector<CellRecord> records;
  // Instance metadata kept out of the CSV.
  std::uint64_t instance_t_edges = 0;
  bool degenerate = false;
};

std::uint64_t derive_cell_seed(std::uint64_t master_seed,
                               const std::string& descriptor);

// Cartesian product of the config's grid lists with its replicates, in a
// fixed order: grid values outer, replicates inner.
std::vector<ExperimentCell> plan_cells(const ExperimentConfig& config);

}  // namespace umtlab
