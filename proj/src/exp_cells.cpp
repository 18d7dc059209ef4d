#include "umtlab/experiments/cells.hpp"

#include <cstdio>

#include "umtlab/error.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

std::string ExperimentCell::descriptor() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s|%s|alpha=%.9g|r=%llu|rep=%llu",
                model_name(model).c_str(), preset.c_str(), alpha,
                static_cast<unsigned long long>(r),
                static_cast<unsigned long long>(replicate));
  return buf;
}

std::uint64_t derive_cell_seed(std::uint64_t master_seed,
                               const std::string& descriptor) {
  return mix64(master_seed ^ mix64(tag64(descriptor)));
}

std::vector<ExperimentCell> plan_cells(const ExperimentConfig& config) {
  config.validate();
  std::vector<ExperimentCell> cells;
  const std::vector<double> alphas =
      config.alphas.empty() ? std::vector<double>{0.0} : config.alphas;
  const std::vector<std::uint64_t> rs =
      config.model == ModelKind::kKg ? config.rs
                                     : std::vector<std::uint64_t>{0};
  for (double alpha : alphas) {
    for (std::uint64_t r : rs) {
      for (std::uint64_t rep = 0; rep < config.replicates; ++rep) {
        ExperimentCell cell;
        cell.model = config.model;
        cell.preset = config.preset;
        cell.alpha = alpha;
        cell.r = r;
        cell.replicate = rep;
        cell.seed = derive_cell_seed(config.master_seed, cell.descriptor());
        cells.push_back(std::move(cell));
      }
    }
  }
  if (cells.empty()) throw ConfigError("plan_cells: empty grid");
  return cells;
}

}  // namespace umtlab
