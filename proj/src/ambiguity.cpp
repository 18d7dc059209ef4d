#include "umtlab/ambiguity.hpp"

#include <cmath>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

PlausibleAmbiguitySet plausible_ambiguities(const TranslatorFamily& family,
                                            const FiniteDistribution& tau,
                                            const FiniteDistribution& rho,
                                            double gamma, double kappa,
                                            const SemanticDifference& ell,
                                            std::uint64_t budget) {
  if (gamma < 0.0 || gamma > 1.0 || kappa < 0.0 || kappa > 1.0) {
    throw ParameterError("plausible_ambiguities: gamma, kappa must be in [0,1]");
  }
  if (tau.space_size() != family.target_size() ||
      rho.space_size() != family.target_size()) {
    throw DimensionError(
        "plausible_ambiguities: tau/rho must live on the family's target "
        "space");
  }
  const std::uint64_t per_member = tau.support_size() + family.target_size();
  const std::uint64_t count = family.size();
  if (per_member != 0 && count > budget / per_member) {
    throw BudgetError("plausible_ambiguities: " + std::to_string(count) +
                      " members x " + std::to_string(per_member) +
                      " evaluations exceeds budget " + std::to_string(budget));
  }

  PlausibleAmbiguitySet out;
  out.gamma = gamma;
  out.kappa = kappa;
  for (std::uint64_t theta = 0; theta < count; ++theta) {
    const Revision rev = build_revision(family, theta);
    double implausible = 0.0;
    double loss = 0.0;
    for (const auto& [y, mass] : tau.entries()) {
      const TextId image = rev(y);
      if (rho.mass(image) <= kappa) implausible += mass;
      const double d = ell(y, image);
      if (d < 0.0 || d > 1.0 || std::isnan(d)) {
        throw ContractError("semantic difference outside [0,1]");
      }
      loss += mass * d;
    }
    if (implausible <= gamma) {
      out.members.push_back(theta);
      if (loss > out.epsilon) out.epsilon = loss;
    }
  }
  return out;
}

}  // namespace umtlab
