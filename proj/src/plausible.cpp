#include "umtlab/learner/plausible.hpp"

#include "umtlab/error.hpp"

namespace umtlab {

PlausibleState make_plausible_state(const TranslatorFamily& family) {
  if (family.size() == 0) throw ConfigError("plausible: empty family");
  PlausibleState state;
  state.alive.assign(family.size(), 1);
  return state;
}

void plausible_update(PlausibleState& state, TextId sample,
                      const std::vector<std::uint8_t>& sensical,
                      const TranslatorFamily& family) {
  if (sample >= family.source_size()) {
    throw DimensionError("plausible_update: sample outside source space");
  }
  if (sensical.size() != family.target_size()) {
    throw DimensionError("plausible_update: mask size mismatch");
  }
  family.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    if (state.alive[index] && !sensical[map[sample]]) {
      state.alive[index] = 0;
    }
  });
  ++state.samples_seen;
}

double plausible_avg_error(const PlausibleState& state,
                           const TranslatorFamily& family,
                           std::span<const TextId> holdout) {
  if (holdout.empty()) {
    throw ParameterError("plausible_avg_error: empty holdout");
  }
  if (!family.star_index()) {
    throw ConfigError("plausible_avg_error: star index not set");
  }
  const Translator star = family.member(*family.star_index());
  double total = 0.0;
  std::uint64_t alive_count = 0;
  family.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    if (!state.alive[index]) return;
    ++alive_count;
    std::uint64_t disagreements = 0;
    for (TextId x : holdout) {
      disagreements += map[x] != star(x);
    }
    total += static_cast<double>(disagreements) /
             static_cast<double>(holdout.size());
  });
  if (alive_count == 0) {
    throw ContractError("plausible_avg_error: no alive members");
  }
  return total / static_cast<double>(alive_count);
}

}  // namespace umtlab
