#include "umtlab/experiments/certify.hpp"

#include <cmath>
#include <vector>

#include "umtlab/ambiguity.hpp"
#include "umtlab/bounds.hpp"
#include "umtlab/error.hpp"
#include "umtlab/learner/mle.hpp"
#include "umtlab/measures.hpp"
#include "umtlab/models/kg.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

CertifyReport certify_plausible_loss_bound(const CertifyConfig& config) {
  if (config.m == 0) {
    throw ParameterError("certify: m must be positive");
  }
  if (config.trials == 0) {
    throw ParameterError("certify: trials must be positive");
  }

  // First non-degenerate instance at or after the requested seed.
  std::uint64_t seed = config.seed;
  KgOutput kg = gen_kg(seed, config.n, config.r, config.p, config.alpha);
  while (kg.instance.degenerate) {
    kg = gen_kg(++seed, config.n, config.r, config.p, config.alpha);
  }
  const KnowledgeGraphInstance& inst = kg.instance;

  const TranslatorFamily node_family = inst.node_family();
  const TranslatorFamily edge_family = kg_edge_family(node_family);

  CertifyReport report;
  report.instance_seed = seed;
  report.family_size = edge_family.size();
  report.gamma =
      gamma_threshold(config.m, static_cast<double>(edge_family.size()),
                      config.delta);
  // Just below the two-level prior's in-graph mass, so a revision counts as
  // implausible exactly when it leaves the target edge set.
  report.kappa = 0.5 / static_cast<double>(inst.target_space());

  // tau is the translated language: the ground-truth image of the source
  // edges, uniform.
  std::vector<TextId> tau_support;
  for (NodePair e : inst.t_edges_src) {
    tau_support.push_back(
        static_cast<TextId>(inst.star[e.first]) * inst.n +
        inst.star[e.second]);
  }
  const FiniteDistribution tau =
      FiniteDistribution::uniform_over(inst.target_space(), tau_support);

  const PlausibleAmbiguitySet ambiguities = plausible_ambiguities(
      edge_family, tau, kg.rho, report.gamma, report.kappa, zero_one_difference,
      config.budget);
  report.epsilon = ambiguities.epsilon;
  report.plausible_members = ambiguities.members.size();

  const std::vector<TextId> mu_support = kg.mu.support();
  Rng trial_rng = Rng::stream(seed, "certify.trials");
  std::vector<TextId> samples(config.m);
  std::uint64_t successes = 0;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    for (std::uint64_t i = 0; i < config.m; ++i) {
      samples[i] = mu_support[trial_rng.below(mu_support.size())];
    }
    const MleResult fit = mle(samples, kg.rho, edge_family);
    const double loss = err(edge_family, fit.theta_index, kg.mu);
    if (loss <= ambiguities.epsilon + 1e-12) ++successes;
  }

  report.trials = config.trials;
  report.successes = successes;
  report.frequency =
      static_cast<double>(successes) / static_cast<double>(config.trials);
  report.target = 1.0 - config.delta;
  report.slack = 3.0 * std::sqrt(config.delta * (1.0 - config.delta) /
                                 static_cast<double>(config.trials));
  report.pass = report.frequency >= report.target - report.slack;
  return report;
}

}  // namespace umtlab
