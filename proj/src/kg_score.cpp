#include "umtlab/learner/kg_score.hpp"

namespace umtlab {

std::uint64_t kg_implausibility_score(std::span<const NodePair> sample_edges,
                                      const std::vector<std::uint8_t>& p_mask,
                                      std::uint64_t n,
                                      std::span<const TextId> node_map) {
  std::uint64_t outside = 0;
  for (NodePair e : sample_edges) {
    const TextId image = node_map[e.first] * n + node_map[e.second];
    outside += p_mask[image] == 0;
  }
  return outside;
}

}  // namespace umtlab
