#pragma once

#include <string>
#include <vector>

#include "umtlab/experiments/config.hpp"

namespace umtlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGeneratorTag = "splitmix64";

// Human-readable run record: tool version, generator tag, seed, the
// effective config, wall-clock timestamps and the list of files the run
// produced. Written after every output it lists.
std::string render_manifest(const ExperimentConfig& config, unsigned threads,
                            const std::string& started_utc,
                            const std::string& finished_utc,
                            const std::vector<std::string>& outputs);

std::string utc_timestamp_now();

}  // namespace umtlab
