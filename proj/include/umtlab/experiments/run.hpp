#pragma once

#include <cstdint>
#include <vector>

#include "umtlab/experiments/cells.hpp"
#include "umtlab/experiments/config.hpp"

namespace umtlab {

// Runs one cell to completion. Deterministic in (cell.seed, config);
// instance-generation failures are rethrown with the cell descriptor
// attached.
CellResult run_cell(const ExperimentCell& cell, const ExperimentConfig& config);

// Runs every planned cell, `threads` at a time (0 = hardware concurrency).
// Results come back in plan order regardless of scheduling.
std::vector<CellResult> run_cells(const ExperimentConfig& config,
                                  unsigned threads);

namespace detail {

// Per-member outcome of the streaming rule-out learner: the 1-based index of
// the first training sample that kills the member (checkpoint_count + 1 when
// it survives them all) and its holdout disagreement fraction against the
// ground truth (meaningful only when the member survives sample 1).
struct MemberFate {
  std::uint32_t death = 0;
  float holdout_error = 0.0f;
};

// Average holdout error among members alive after each of m = 1..max_m
// training samples, assembled from per-member fates by suffix sums over
// death times. Sums run in ascending member order within each death bucket.
std::vector<double> plausible_error_curve(const std::vector<MemberFate>& fates,
                                          std::uint64_t max_m);

}  // namespace detail

}  // namespace umtlab
