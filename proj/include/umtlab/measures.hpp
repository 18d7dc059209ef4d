#pragma once

#include <functional>

#include "umtlab/distribution.hpp"
#include "umtlab/translator.hpp"

namespace umtlab {

// Semantic difference between two target texts, valued in [0,1] with
// ell(y, y) == 0. The 0-1 difference recovers the semantic error.
using SemanticDifference = std::function<double(TextId, TextId)>;

inline double zero_one_difference(TextId a, TextId b) {
  return a == b ? 0.0 : 1.0;
}

// Pr_{x~mu}[f_theta(x) != f_star(x)], summed exactly over support(mu).
double err(const TranslatorFamily& family, std::uint64_t theta_index,
           const FiniteDistribution& mu);

// E_{x~mu}[ell(f_star(x), f_theta(x))]. With the 0-1 difference this equals
// err. Values of ell outside [0,1] (or ell(y,y) != 0) raise ContractError.
double semantic_loss(const TranslatorFamily& family, std::uint64_t theta_index,
                     const FiniteDistribution& mu,
                     const SemanticDifference& ell);

// KL(f o mu || rho) in bits. Returns +infinity exactly when some supported
// source text maps to a target with zero prior mass.
double divergence(const FiniteDistribution& mu, const FiniteDistribution& rho,
                  const Translator& translator);

// E_{x~mu}[-log2 rho(f(x))]: the population cross-entropy whose argmin over
// a family coincides with the argmin of divergence (the entropy of mu
// cancels). +infinity under the same condition as divergence.
double cross_entropy(const FiniteDistribution& mu,
                     const FiniteDistribution& rho,
                     const Translator& translator);

// Permutation of the target space comparing f_theta against f_star:
// perm(y) = f_theta(f_star^{-1}(y)) on f_star's image, completed off the
// image by matching the remaining targets in ascending order (the
// lexicographically smallest extension).
struct Revision {
  std::vector<TextId> perm;

  TextId operator()(TextId y) const { return perm[y]; }
};

Revision build_revision(const TranslatorFamily& family,
                        std::uint64_t theta_index);

}  // namespace umtlab
