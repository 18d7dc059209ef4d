#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "umtlab/measures.hpp"
#include "umtlab/translator.hpp"

namespace umtlab {

// Supervised baseline: lexicographically smallest minimizer of the summed
// loss ell(y_i, f_theta(x_i)) over labeled pairs. Zero pairs tie everyone
// and index 0 wins. Losses are accumulated grouped by value, like mle, so
// equal empirical-loss members tie exactly.
std::uint64_t erm_supervised(std::span<const std::pair<TextId, TextId>> pairs,
                             const TranslatorFamily& family,
                             const SemanticDifference& ell);

}  // namespace umtlab
