#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umtlab/distribution.hpp"
#include "umtlab/translator.hpp"
#include "umtlab/types.hpp"

namespace umtlab {

// Uniform languages over nested id sets with a shared random removal. The
// source space is [t_size], the target space [p_size]; the plausible set P
// is the whole target space and the translated set T is the hidden star's
// image. The sensical mask marks the targets that survived the removal.
struct CommonNonsenseInstance {
  std::uint64_t t_size = 0;
  std::uint64_t p_size = 0;
  double alpha = 0.0;

  std::vector<std::uint8_t> sensical;  // 1 = kept, indexed by target id
  TranslatorFamily family;             // explicit members, star set
  std::vector<TextId> mu_support;      // x with f_star(x) sensical, sorted
  bool degenerate = false;
  std::vector<std::string> warnings;
};

struct CnOutput {
  CommonNonsenseInstance instance;
  FiniteDistribution mu;   // uniform over mu_support
  FiniteDistribution rho;  // uniform over the sensical targets
};

// Removes each target id independently with probability alpha, draws
// family_size uniform injections [t_size] -> [p_size] (duplicates allowed)
// and secretly picks one of them as ground truth. alpha above 1/2 is
// generated with a warning attached. If the removal empties either language
// the instance collapses to the singleton concentrated on the ground-truth
// image of source text 0.
//
// Members are materialized in full; intended for enumerable sizes. The
// experiment runner has a streaming counterpart for large families.
CnOutput gen_cn(std::uint64_t seed, std::uint64_t t_size, std::uint64_t p_size,
                double alpha, std::uint64_t family_size);

}  // namespace umtlab
