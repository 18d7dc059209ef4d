#pragma once

#include <cstdint>
#include <span>

#include "umtlab/models/kg.hpp"

namespace umtlab {

// Number of sampled source edges whose node-wise image under the translator
// falls outside the target edge set. Under the smoothed two-level prior the
// likelihood objective is strictly increasing in this count, so its argmin
// set equals the maximum-likelihood argmin set; being an integer it is also
// immune to rounding, which is why the experiment runner compares scores
// rather than floating objectives.
std::uint64_t kg_implausibility_score(std::span<const NodePair> sample_edges,
                                      const std::vector<std::uint8_t>& p_mask,
                                      std::uint64_t n,
                                      std::span<const TextId> node_map);

}  // namespace umtlab
