#pragma once

#include <cstdint>
#include <span>

#include "umtlab/distribution.hpp"
#include "umtlab/translator.hpp"

namespace umtlab {

struct MleResult {
  std::uint64_t theta_index = 0;  // smallest index attaining the minimum
  double objective = 0.0;         // bits; +infinity when every image set has
                                  // a zero-mass translation
  std::uint64_t ties = 0;         // number of co-minimal indices
};

// Exhaustive maximum-likelihood selection: minimizes
// sum_i -log2 rho(f_theta(x_i)) over the family, breaking ties by family
// index. A zero-mass translation makes the objective +infinity; if every
// member is infinite they all tie and index 0 wins, as does m = 0.
//
// The per-member sum is accumulated over the distinct prior values with
// their multiplicities, in ascending value order. This keeps the floating
// objective identical for members whose translations hit the same multiset
// of prior masses (e.g. two-level priors), so tie sets are exact.
MleResult mle(std::span<const TextId> samples, const FiniteDistribution& rho,
              const TranslatorFamily& family);

}  // namespace umtlab
