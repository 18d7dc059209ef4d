#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace umtlab {

enum class ModelKind { kKg, kCn, kRt, kLb };

std::string model_name(ModelKind model);

// One experiment: a parameter grid crossed with replicates, evaluated at a
// fixed set of sample-count checkpoints. Which grid fields matter depends on
// the model; validate() enforces the per-model requirements.
struct ExperimentConfig {
  ModelKind model = ModelKind::kKg;
  std::string preset = "custom";
  std::uint64_t master_seed = 1;
  std::uint64_t replicates = 1;
  std::vector<std::uint64_t> checkpoints;  // strictly increasing
  bool full_pass = false;  // knowledge graph / tree: one pass over all of T

  std::vector<double> alphas;  // ablated for kg, cn and lb

  // knowledge graph
  std::vector<std::uint64_t> rs;
  std::uint64_t n = 0;
  double p = 0.0;

  // common nonsense
  std::uint64_t t_size = 0;
  std::uint64_t p_size = 0;
  std::uint64_t family_size = 0;
  std::uint64_t holdout = 1000;

  // random tree (word-for-word translator family)
  std::uint64_t vocab = 0;
  std::uint64_t depth = 0;
  std::uint64_t arity_a = 0;
  std::uint64_t arity_b = 0;

  // lower-bound grid
  std::uint64_t n_params = 0;

  void validate() const;  // throws ConfigError
};

// Built-in presets: fig4-left (knowledge graph, agreement ablation),
// fig4-right (knowledge graph, source-size ablation at full sample budget),
// fig5 (common nonsense, nonsense-fraction ablation), and the small
// kg-smoke / cn-smoke grids used for quick determinism checks.
ExperimentConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

// Flat "key = value" file with [experiment] and [grid] sections; '#' starts
// a comment, lists are comma separated and checkpoint sets accept "lo:hi"
// ranges. Unknown keys and malformed lines raise ConfigError with line and
// column.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace umtlab
