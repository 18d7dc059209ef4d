#include "umtlab/models/cn.hpp"

#include <string>

#include "umtlab/error.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

CnOutput gen_cn(std::uint64_t seed, std::uint64_t t_size, std::uint64_t p_size,
                double alpha, std::uint64_t family_size) {
  if (t_size == 0 || t_size > p_size) {
    throw ParameterError("gen_cn: need 1 <= t_size <= p_size");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw ParameterError("gen_cn: alpha must be in [0,1]");
  }
  if (family_size == 0) {
    throw ParameterError("gen_cn: family_size must be positive");
  }

  CommonNonsenseInstance inst;
  inst.t_size = t_size;
  inst.p_size = p_size;
  inst.alpha = alpha;
  if (alpha > 0.5) {
    inst.warnings.push_back("alpha above 1/2 is outside the analyzed range");
  }

  Rng mask_rng = Rng::stream(seed, "cn.sensical");
  inst.sensical.assign(p_size, 0);
  std::vector<TextId> kept;
  for (TextId y = 0; y < p_size; ++y) {
    if (!mask_rng.bernoulli(alpha)) {
      inst.sensical[y] = 1;
      kept.push_back(y);
    }
  }

  std::vector<Translator> members;
  members.reserve(family_size);
  for (std::uint64_t k = 0; k < family_size; ++k) {
    Rng member_rng = Rng::stream(seed, "cn.member", k);
    members.push_back(
        Translator{member_rng.sample_distinct(t_size, p_size)});
  }
  inst.family =
      TranslatorFamily::explicit_family(t_size, p_size, std::move(members));
  Rng star_rng = Rng::stream(seed, "cn.star");
  inst.family.set_star(star_rng.below(family_size));
  const Translator star = inst.family.member(*inst.family.star_index());

  for (TextId x = 0; x < t_size; ++x) {
    if (inst.sensical[star(x)]) inst.mu_support.push_back(x);
  }

  if (inst.mu_support.empty() || kept.empty()) {
    // Both languages collapse to a singleton; a learner that sends text 0 to
    // the ground-truth image has zero error.
    inst.degenerate = true;
    const TextId y0 = star(0);
    inst.sensical.assign(p_size, 0);
    inst.sensical[y0] = 1;
    inst.mu_support.assign(1, 0);
    FiniteDistribution mu = FiniteDistribution::singleton(t_size, 0);
    FiniteDistribution rho = FiniteDistribution::singleton(p_size, y0);
    return CnOutput{std::move(inst), std::move(mu), std::move(rho)};
  }

  FiniteDistribution mu =
      FiniteDistribution::uniform_over(t_size, inst.mu_support);
  FiniteDistribution rho =
      FiniteDistribution::uniform_over(p_size, std::move(kept));
  return CnOutput{std::move(inst), std::move(mu), std::move(rho)};
}

}  // namespace umtlab
