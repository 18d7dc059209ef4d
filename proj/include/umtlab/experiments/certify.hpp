#pragma once

#include <cstdint>

namespace umtlab {

// Empirical certification that the exhaustive likelihood learner's loss
// stays below the worst plausible-ambiguity loss with the advertised
// probability. A small knowledge graph instance is enumerated exactly:
// epsilon is the maximum error over the (gamma, kappa)-plausible members at
// gamma = ln(|family|/delta)/m and kappa just below the in-graph prior
// level, then `trials` independent sample draws are scored.
struct CertifyConfig {
  std::uint64_t seed = 1;
  std::uint64_t n = 5;
  std::uint64_t r = 4;
  double p = 0.5;
  double alpha = 1.0;  // full agreement keeps the ground truth implausibility-free
  double delta = 0.1;
  std::uint64_t m = 100;  // large enough that the plausible set truly shrinks
  std::uint64_t trials = 200;
  std::uint64_t budget = 10'000'000;
};

struct CertifyReport {
  std::uint64_t instance_seed = 0;  // first non-degenerate seed >= seed
  std::uint64_t family_size = 0;
  double gamma = 0.0;
  double kappa = 0.0;
  double epsilon = 0.0;
  std::uint64_t plausible_members = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double frequency = 0.0;
  double target = 0.0;  // 1 - delta
  double slack = 0.0;   // 3 sigma binomial at the target rate
  bool pass = false;    // frequency >= target - slack
};

CertifyReport certify_plausible_loss_bound(const CertifyConfig& config);

}  // namespace umtlab
