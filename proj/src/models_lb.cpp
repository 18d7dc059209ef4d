#include "umtlab/models/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "umtlab/error.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

std::vector<std::uint64_t> LowerBoundInstance::full_rows() const {
  std::vector<std::uint64_t> rows;
  for (std::uint64_t i = 0; i < a; ++i) {
    bool full = true;
    for (std::uint64_t j = 0; j < b && full; ++j) {
      full = kept[grid_cell(i, j)] != 0;
    }
    if (full) rows.push_back(i);
  }
  return rows;
}

LowerBoundOutput gen_lower_bound_instance(std::uint64_t seed,
                                          std::uint64_t n_params, double alpha,
                                          std::uint64_t m,
                                          std::uint64_t t_size,
                                          std::uint64_t shift_denominator) {
  if (alpha <= 0.0 || alpha > 0.5) {
    throw AdmissibilityError("gen_lower_bound_instance: alpha in (0, 1/2]");
  }
  if (n_params < 2) {
    throw ParameterError("gen_lower_bound_instance: n_params must be >= 2");
  }
  if (m == 0 || t_size == 0 || shift_denominator == 0) {
    throw ParameterError(
        "gen_lower_bound_instance: m, t_size, shift_denominator positive");
  }
  const double log2_theta = std::log2(static_cast<double>(n_params));
  const double cap = alpha * static_cast<double>(std::min(m, t_size));
  if (log2_theta > cap) {
    throw AdmissibilityError(
        "gen_lower_bound_instance: admissibility violated: log2(n_params) = " +
        std::to_string(log2_theta) + " > alpha * min(m, t_size) = " +
        std::to_string(cap));
  }

  LowerBoundInstance inst;
  inst.a = static_cast<std::uint64_t>(std::floor(log2_theta));
  const double pressure = static_cast<double>(t_size) /
                          (static_cast<double>(shift_denominator) *
                           static_cast<double>(m));
  inst.b = static_cast<std::uint64_t>(
      std::floor(std::max(1.0, pressure) / alpha));
  inst.t_size = t_size;
  inst.alpha = alpha;
  inst.m = m;
  inst.shift_denominator = shift_denominator;
  if (inst.a * inst.b > t_size) {
    // Follows from admissibility; kept as a guard against flooring surprises.
    throw AdmissibilityError("gen_lower_bound_instance: grid exceeds |T|");
  }
  const std::uint64_t count = std::uint64_t{1} << inst.a;
  if (count > (std::uint64_t{1} << 26) ||
      count * t_size > (std::uint64_t{1} << 30)) {
    throw BudgetError("gen_lower_bound_instance: family too large to store");
  }

  std::vector<Translator> members;
  members.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<TextId> map(t_size);
    for (TextId x = 0; x < t_size; ++x) map[x] = x;
    for (std::uint64_t i = 0; i < inst.a; ++i) {
      if (((k >> (inst.a - 1 - i)) & 1) == 0) continue;  // +1: identity row
      for (std::uint64_t j = 0; j < inst.b; ++j) {
        map[inst.grid_cell(i, j)] = inst.grid_cell(i, (j + 1) % inst.b);
      }
    }
    members.push_back(Translator{std::move(map)});
  }
  inst.family =
      TranslatorFamily::explicit_family(t_size, t_size, std::move(members));
  Rng star_rng = Rng::stream(seed, "lb.star");
  inst.family.set_star(star_rng.below(count));
  const Translator star = inst.family.member(*inst.family.star_index());

  Rng mask_rng = Rng::stream(seed, "lb.survive");
  inst.kept.assign(t_size, 0);
  std::vector<TextId> kept_ids;
  for (TextId y = 0; y < t_size; ++y) {
    if (!mask_rng.bernoulli(alpha)) {
      inst.kept[y] = 1;
      kept_ids.push_back(y);
    }
  }
  for (TextId x = 0; x < t_size; ++x) {
    if (inst.kept[star(x)]) inst.mu_support.push_back(x);
  }

  if (inst.mu_support.empty() || kept_ids.empty()) {
    inst.degenerate = true;
    const TextId y0 = star(0);
    inst.kept.assign(t_size, 0);
    inst.kept[y0] = 1;
    inst.mu_support.assign(1, 0);
    FiniteDistribution mu = FiniteDistribution::singleton(t_size, 0);
    FiniteDistribution rho = FiniteDistribution::singleton(t_size, y0);
    return LowerBoundOutput{std::move(inst), std::move(mu), std::move(rho)};
  }

  FiniteDistribution mu =
      FiniteDistribution::uniform_over(t_size, inst.mu_support);
  FiniteDistribution rho =
      FiniteDistribution::uniform_over(t_size, std::move(kept_ids));
  return LowerBoundOutput{std::move(inst), std::move(mu), std::move(rho)};
}

}  // namespace umtlab
