#include "umtlab/measures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

namespace {

std::uint64_t require_star(const TranslatorFamily& family) {
  const auto star = family.star_index();
  if (!star) {
    throw ConfigError("family has no ground-truth (star) index set");
  }
  return *star;
}

void require_source_space(const TranslatorFamily& family,
                          const FiniteDistribution& mu) {
  if (mu.space_size() != family.source_size()) {
    throw DimensionError("distribution space " +
                         std::to_string(mu.space_size()) +
                         " does not match family source space " +
                         std::to_string(family.source_size()));
  }
}

}  // namespace

double err(const TranslatorFamily& family, std::uint64_t theta_index,
           const FiniteDistribution& mu) {
  const std::uint64_t star_index = require_star(family);
  require_source_space(family, mu);
  const Translator f_theta = family.member(theta_index);
  const Translator f_star = family.member(star_index);
  double total = 0.0;
  for (const auto& [x, mass] : mu.entries()) {
    if (f_theta(x) != f_star(x)) total += mass;
  }
  return total;
}

double semantic_loss(const TranslatorFamily& family, std::uint64_t theta_index,
                     const FiniteDistribution& mu,
                     const SemanticDifference& ell) {
  const std::uint64_t star_index = require_star(family);
  require_source_space(family, mu);
  const Translator f_theta = family.member(theta_index);
  const Translator f_star = family.member(star_index);
  double total = 0.0;
  for (const auto& [x, mass] : mu.entries()) {
    const TextId truth = f_star(x);
    const TextId guess = f_theta(x);
    const double d = ell(truth, guess);
    if (d < 0.0 || d > 1.0 || std::isnan(d)) {
      throw ContractError("semantic difference outside [0,1]");
    }
    if (truth == guess && d != 0.0) {
      throw ContractError("semantic difference nonzero on equal texts");
    }
    total += mass * d;
  }
  return total;
}

double divergence(const FiniteDistribution& mu, const FiniteDistribution& rho,
                  const Translator& translator) {
  if (translator.source_size() != mu.space_size()) {
    throw DimensionError("translator domain does not match mu's space");
  }
  double total = 0.0;
  for (const auto& [x, mass] : mu.entries()) {
    const TextId y = translator(x);
    if (y >= rho.space_size()) {
      throw DimensionError("translator maps outside rho's space");
    }
    const double q = rho.mass(y);
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    total += mass * std::log2(mass / q);
  }
  return total;
}

double cross_entropy(const FiniteDistribution& mu,
                     const FiniteDistribution& rho,
                     const Translator& translator) {
  if (translator.source_size() != mu.space_size()) {
    throw DimensionError("translator domain does not match mu's space");
  }
  double total = 0.0;
  for (const auto& [x, mass] : mu.entries()) {
    const double q = rho.mass(translator(x));
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    total -= mass * std::log2(q);
  }
  return total;
}

Revision build_revision(const TranslatorFamily& family,
                        std::uint64_t theta_index) {
  const std::uint64_t star_index = require_star(family);
  const std::uint64_t target = family.target_size();
  const Translator f_theta = family.member(theta_index);
  const Translator f_star = family.member(star_index);

  constexpr TextId kUnset = ~TextId{0};
  std::vector<TextId> perm(target, kUnset);
  std::vector<char> image_used(target, 0);
  for (std::uint64_t x = 0; x < family.source_size(); ++x) {
    perm[f_star(x)] = f_theta(x);
    image_used[f_theta(x)] = 1;
  }
  // Ascending matching of the leftover domain onto the leftover image.
  TextId next_free = 0;
  for (TextId y = 0; y < target; ++y) {
    if (perm[y] != kUnset) continue;
    while (image_used[next_free]) ++next_free;
    perm[y] = next_free;
    image_used[next_free] = 1;
  }
  return Revision{std::move(perm)};
}

}  // namespace umtlab
