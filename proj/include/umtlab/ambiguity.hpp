#pragma once

#include <cstdint>
#include <vector>

#include "umtlab/distribution.hpp"
#include "umtlab/measures.hpp"
#include "umtlab/translator.hpp"

namespace umtlab {

inline constexpr std::uint64_t kDefaultAmbiguityBudget = 10'000'000;

// The set of family indices whose revisions land on low-prior targets with
// probability at most gamma under tau, together with the worst loss among
// them. kappa = 0 counts only zero-mass targets; a positive kappa admits
// full-support priors by treating mass <= kappa as implausible.
struct PlausibleAmbiguitySet {
  double gamma = 0.0;
  double kappa = 0.0;
  std::vector<std::uint64_t> members;  // ascending family indices
  double epsilon = 0.0;                // max loss over members, 0 if empty
};

// Exact membership by full enumeration of the family and support(tau).
// Throws BudgetError when |family| * (|support(tau)| + target space) exceeds
// `budget` member-evaluations; shrink the instance rather than wait forever.
PlausibleAmbiguitySet plausible_ambiguities(
    const TranslatorFamily& family, const FiniteDistribution& tau,
    const FiniteDistribution& rho, double gamma, double kappa,
    const SemanticDifference& ell,
    std::uint64_t budget = kDefaultAmbiguityBudget);

}  // namespace umtlab
