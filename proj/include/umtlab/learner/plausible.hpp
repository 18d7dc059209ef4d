#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "umtlab/translator.hpp"

namespace umtlab {

// Elimination state of the rule-out learner: a translator stays alive until
// some observed source text maps to a nonsensical target under it. The
// ground truth can never be ruled out by samples drawn from the source
// language, and the alive set only shrinks.
struct PlausibleState {
  std::vector<std::uint8_t> alive;
  std::uint64_t samples_seen = 0;
};

PlausibleState make_plausible_state(const TranslatorFamily& family);

// Kills every alive member whose image of `sample` is marked nonsensical.
void plausible_update(PlausibleState& state, TextId sample,
                      const std::vector<std::uint8_t>& sensical,
                      const TranslatorFamily& family);

// Mean over alive members of the fraction of holdout texts on which the
// member disagrees with the ground truth. Requires a set star index, a
// non-empty holdout (ParameterError otherwise) and at least one alive
// member (ContractError otherwise).
double plausible_avg_error(const PlausibleState& state,
                           const TranslatorFamily& family,
                           std::span<const TextId> holdout);

}  // namespace umtlab
