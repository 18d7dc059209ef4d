#include "umtlab/experiments/manifest.hpp"

#include <ctime>

#include "umtlab/experiments/csv.hpp"

namespace umtlab {

namespace {

std::string join_counts(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::uint64_t v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ",";
    out += format_real(v);
  }
  return out;
}

}  // namespace

std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render_manifest(const ExperimentConfig& config, unsigned threads,
                            const std::string& started_utc,
                            const std::string& finished_utc,
                            const std::vector<std::string>& outputs) {
  std::string out = "umtlab manifest v1\n";
  out += "version " + std::string(kToolVersion) + "\n";
  out += "generator " + std::string(kGeneratorTag) + "\n";
  out += "threads " + std::to_string(threads) + "\n";
  out += "started " + started_utc + "\n";
  out += "finished " + finished_utc + "\n";
  out += "config.model = " + model_name(config.model) + "\n";
  out += "config.preset = " + config.preset + "\n";
  out += "config.master_seed = " + std::to_string(config.master_seed) + "\n";
  out += "config.seeds = " + std::to_string(config.replicates) + "\n";
  out += "config.full_pass = " + std::string(config.full_pass ? "true" : "false") + "\n";
  if (!config.checkpoints.empty()) {
    out += "config.checkpoints = " + std::to_string(config.checkpoints.front()) +
           ":" + std::to_string(config.checkpoints.back()) + "\n";
  }
  if (!config.alphas.empty()) {
    out += "config.alpha = " + join_reals(config.alphas) + "\n";
  }
  switch (config.model) {
    case ModelKind::kKg:
      out += "config.r = " + join_counts(config.rs) + "\n";
      out += "config.n = " + std::to_string(config.n) + "\n";
      out += "config.p = " + format_real(config.p) + "\n";
      break;
    case ModelKind::kCn:
      out += "config.t_size = " + std::to_string(config.t_size) + "\n";
      out += "config.p_size = " + std::to_string(config.p_size) + "\n";
      out += "config.family_size = " + std::to_string(config.family_size) + "\n";
      out += "config.holdout = " + std::to_string(config.holdout) + "\n";
      break;
    case ModelKind::kRt:
      out += "config.vocab = " + std::to_string(config.vocab) + "\n";
      out += "config.depth = " + std::to_string(config.depth) + "\n";
      out += "config.a = " + std::to_string(config.arity_a) + "\n";
      out += "config.b = " + std::to_string(config.arity_b) + "\n";
      break;
    case ModelKind::kLb:
      out += "config.n_params = " + std::to_string(config.n_params) + "\n";
      out += "config.t_size = " + std::to_string(config.t_size) + "\n";
      break;
  }
  for (const std::string& file : outputs) {
    out += "output " + file + "\n";
  }
  return out;
}

}  // namespace umtlab
