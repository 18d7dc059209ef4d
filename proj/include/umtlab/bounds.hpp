#pragma once

#include <cstdint>
#include <optional>

namespace umtlab {

// Default constant for the grid lower bound. The construction's own
// constants give 1e5 * 2.56e7; the value only matters up to the existence
// claim, so it is exposed as a knob.
inline constexpr double kLowerBoundC2 = 1e5 * 256e5;

// Parameters shared by the closed-form bound evaluators. theta_count may be
// replaced by log_theta (natural log of the family size) when the family is
// too large to count directly, e.g. log|Theta| = sum log k for factorial
// families.
struct BoundParams {
  std::uint64_t m = 1;         // sample count
  std::uint64_t n = 0;         // target node count (knowledge graph)
  std::uint64_t r = 0;         // source node count (knowledge graph)
  double p = 0.5;              // edge density; q = 1 - p
  double alpha = 0.5;          // agreement / common-nonsense fraction
  double delta = 0.01;         // failure probability
  double theta_count = 0.0;    // |Theta|
  std::optional<double> log_theta;  // ln|Theta| override
  std::uint64_t t_size = 0;    // |T|
  std::uint64_t a = 0;         // tree arity of the translated subtree
  std::uint64_t depth = 0;     // tree depth n (text length)
  double c2 = kLowerBoundC2;   // lower-bound constant
};

// High-probability error bound for the knowledge graph model:
// max( 64/(alpha^2 p q^2 r^2) * ln(6 n^r / delta),
//      (2/(alpha q)) * sqrt((2/m) * ln(6 n^r / delta)) ).
// ln(6 n^r / delta) is evaluated in log space. Values above 1 are returned
// unclamped; they are meaningful as "vacuous".
double kg_bound(const BoundParams& params);

// Common nonsense model: (6/alpha) * max(1/m, 16/|T|) * ln(6|Theta|/delta).
// With proof_form set, the inner constant becomes 8/((1-alpha)|T|), the
// form the bound is actually derived with.
double cn_bound(const BoundParams& params, bool proof_form = false);

// Matching lower bound: log2|Theta| / (c2 * alpha * min(m, |T|)). Requires
// log2|Theta| <= alpha * min(m, |T|); otherwise throws AdmissibilityError
// naming the violated inequality.
double cn_lower_bound(const BoundParams& params);

// Random tree model: 16 * max(1/m, 4/a^depth) * ln(6|Theta|/delta).
double rt_bound(const BoundParams& params);

// Sample threshold from the plausible-ambiguity guarantee:
// gamma = (1/m) * ln(|Theta|/delta).
double gamma_threshold(std::uint64_t m, double theta_count, double delta);

// Occam bound for the supervised baseline: (1/m) ln(|Theta|/delta) when
// realizable, else loss_star + sqrt((1/m) ln(|Theta|/delta)).
double occam_bound(std::uint64_t m, double theta_count, double delta,
                   bool realizable, double loss_star);

// ln(k!) by direct summation; used for factorial family sizes.
double log_factorial(std::uint64_t k);

inline bool vacuous(double bound) { return bound >= 1.0; }

}  // namespace umtlab
