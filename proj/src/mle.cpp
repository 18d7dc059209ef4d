#include "umtlab/learner/mle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "umtlab/error.hpp"

namespace umtlab {

MleResult mle(std::span<const TextId> samples, const FiniteDistribution& rho,
              const TranslatorFamily& family) {
  if (family.size() == 0) throw ConfigError("mle: empty family");
  if (rho.space_size() != family.target_size()) {
    throw DimensionError("mle: rho does not live on the family's target space");
  }
  for (TextId x : samples) {
    if (x >= family.source_size()) {
      throw DimensionError("mle: sample outside the family's source space");
    }
  }

  MleResult best;
  best.objective = std::numeric_limits<double>::infinity();
  best.ties = 0;
  bool have_best = false;

  std::vector<double> masses;
  masses.reserve(samples.size());
  family.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    double objective = 0.0;
    masses.clear();
    for (TextId x : samples) {
      const double q = rho.mass(map[x]);
      if (q == 0.0) {
        objective = std::numeric_limits<double>::infinity();
        break;
      }
      masses.push_back(q);
    }
    if (!std::isinf(objective)) {
      std::sort(masses.begin(), masses.end());
      std::size_t i = 0;
      while (i < masses.size()) {
        std::size_t j = i;
        while (j < masses.size() && masses[j] == masses[i]) ++j;
        objective -= static_cast<double>(j - i) * std::log2(masses[i]);
        i = j;
      }
    }
    if (!have_best || objective < best.objective) {
      best.theta_index = index;
      best.objective = objective;
      best.ties = 1;
      have_best = true;
    } else if (objective == best.objective) {
      ++best.ties;
    }
  });
  return best;
}

}  // namespace umtlab
