#include "umtlab/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

namespace {

void check_bijection(std::span<const TextId> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (TextId y : perm) {
    if (y >= perm.size() || seen[y]) {
      throw ContractError("partition: input is not a bijection");
    }
    seen[y] = 1;
  }
}

}  // namespace

PartitionResult partition3(std::span<const TextId> perm) {
  check_bijection(perm);
  PartitionResult out;
  out.parts.assign(3, {});
  std::vector<char> visited(perm.size(), 0);
  for (TextId start = 0; start < perm.size(); ++start) {
    if (visited[start] || perm[start] == start) continue;
    // Walk the cycle from its minimal element alternating A1/A2; an odd
    // cycle ends with its last element in A3 so no part maps into itself.
    std::vector<TextId> cycle;
    TextId y = start;
    do {
      visited[y] = 1;
      cycle.push_back(y);
      y = perm[y];
    } while (y != start);
    const bool odd = cycle.size() % 2 == 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (odd && i + 1 == cycle.size()) {
        out.parts[2].push_back(cycle[i]);
      } else {
        out.parts[i % 2].push_back(cycle[i]);
      }
      out.moved.push_back(cycle[i]);
    }
  }
  std::sort(out.moved.begin(), out.moved.end());
  return out;
}

PartitionResult partition4(
    std::span<const TextId> perm,
    const std::function<std::uint64_t(TextId)>& prefix_of,
    std::uint64_t alphabet_size) {
  check_bijection(perm);
  if (alphabet_size < 4 || alphabet_size % 2 != 0) {
    // With an odd alphabet two parts can saturate the same prefix class at
    // once and the greedy assignment can strand an element.
    throw ContractError("partition4: alphabet size must be even and >= 4");
  }

  std::vector<TextId> inverse(perm.size());
  for (TextId y = 0; y < perm.size(); ++y) inverse[perm[y]] = y;

  PartitionResult out;
  out.parts.assign(4, {});
  for (TextId y = 0; y < perm.size(); ++y) {
    if (perm[y] != y) out.moved.push_back(y);
  }

  // The prefix-cap argument needs each prefix class of the moved set to fit
  // inside one alphabet's worth of texts.
  std::map<std::uint64_t, std::uint64_t> class_size;
  for (TextId y : out.moved) ++class_size[prefix_of(y)];
  for (const auto& [z, count] : class_size) {
    if (count > alphabet_size) {
      throw ContractError("partition4: prefix class " + std::to_string(z) +
                          " has " + std::to_string(count) +
                          " moved elements, more than the alphabet size");
    }
  }

  constexpr int kUnassigned = -1;
  std::vector<int> part_of(perm.size(), kUnassigned);
  // prefix_load[(z, i)] = elements of part i sharing prefix z.
  std::map<std::pair<std::uint64_t, int>, std::uint64_t> prefix_load;
  const std::uint64_t cap = alphabet_size / 2;

  for (TextId y : out.moved) {
    const int blocked_image =
        part_of[perm[y]] == kUnassigned ? 0 : part_of[perm[y]];
    const int blocked_preimage =
        part_of[inverse[y]] == kUnassigned ? 0 : part_of[inverse[y]];
    const std::uint64_t z = prefix_of(y);
    int blocked_prefix = 0;
    for (int i = 0; i < 4; ++i) {
      auto it = prefix_load.find({z, i});
      if (it != prefix_load.end() && it->second >= cap) {
        blocked_prefix = i;
        break;
      }
    }
    int chosen = -1;
    for (int i = 0; i < 4; ++i) {
      if (i != blocked_image && i != blocked_preimage && i != blocked_prefix) {
        chosen = i;
        break;
      }
    }
    part_of[y] = chosen;
    out.parts[chosen].push_back(y);
    ++prefix_load[{z, chosen}];
  }
  return out;
}

}  // namespace umtlab
