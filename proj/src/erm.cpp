#include "umtlab/learner/erm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "umtlab/error.hpp"

namespace umtlab {

std::uint64_t erm_supervised(std::span<const std::pair<TextId, TextId>> pairs,
                             const TranslatorFamily& family,
                             const SemanticDifference& ell) {
  if (family.size() == 0) throw ConfigError("erm_supervised: empty family");
  for (const auto& [x, y] : pairs) {
    if (x >= family.source_size() || y >= family.target_size()) {
      throw DimensionError("erm_supervised: pair outside the text spaces");
    }
  }

  std::uint64_t best_index = 0;
  double best_loss = std::numeric_limits<double>::infinity();
  bool have_best = false;
  std::vector<double> losses;
  losses.reserve(pairs.size());
  family.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    losses.clear();
    for (const auto& [x, y] : pairs) {
      const double d = ell(y, map[x]);
      if (d < 0.0 || d > 1.0 || std::isnan(d)) {
        throw ContractError("semantic difference outside [0,1]");
      }
      losses.push_back(d);
    }
    std::sort(losses.begin(), losses.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < losses.size()) {
      std::size_t j = i;
      while (j < losses.size() && losses[j] == losses[i]) ++j;
      total += static_cast<double>(j - i) * losses[i];
      i = j;
    }
    if (!have_best || total < best_loss) {
      best_index = index;
      best_loss = total;
      have_best = true;
    }
  });
  return best_index;
}

}  // namespace umtlab
