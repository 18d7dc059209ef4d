#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "umtlab/types.hpp"

namespace umtlab {

// Disjoint parts covering exactly the moved set {y : perm(y) != y}.
// Fixed points never appear in any part.
struct PartitionResult {
  std::vector<std::vector<TextId>> parts;
  std::vector<TextId> moved;
};

// Splits the moved set of a permutation into three parts with
// perm(A_i) disjoint from A_i: cycles are walked from their minimal element
// alternating between the first two parts, with the tail of each odd cycle
// placed alone in the third. Throws ContractError on non-bijective input.
PartitionResult partition3(std::span<const TextId> perm);

// Splits the moved set into four parts such that perm(A_i) is disjoint from
// A_i and, for every prefix key z, at most alphabet_size/2 elements of each
// part share the prefix z. Elements are assigned greedily in ascending id
// order to the smallest part not excluded by perm(y), perm^{-1}(y), or a
// saturated prefix. Requires an even alphabet_size >= 4 and at most
// alphabet_size moved elements per prefix class; otherwise throws
// ContractError.
PartitionResult partition4(std::span<const TextId> perm,
                           const std::function<std::uint64_t(TextId)>& prefix_of,
                           std::uint64_t alphabet_size);

}  // namespace umtlab
