#include "umtlab/models/kg.hpp"

#include <algorithm>
#include <string>

#include "umtlab/error.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

std::vector<std::uint8_t> KnowledgeGraphInstance::p_mask() const {
  std::vector<std::uint8_t> mask(target_space(), 0);
  for (NodePair e : p_edges) mask[edge_id(e, n)] = 1;
  return mask;
}

std::vector<TextId> KnowledgeGraphInstance::t_text_ids() const {
  std::vector<TextId> ids;
  ids.reserve(t_edges_src.size());
  for (NodePair e : t_edges_src) ids.push_back(edge_id(e, r));
  return ids;
}

TranslatorFamily KnowledgeGraphInstance::node_family() const {
  TranslatorFamily family = TranslatorFamily::all_injections(r, n);
  std::vector<TextId> star_map(star.begin(), star.end());
  family.set_star(family.rank_of(star_map));
  return family;
}

KgOutput gen_kg(std::uint64_t seed, std::uint64_t n, std::uint64_t r, double p,
                double alpha) {
  if (r == 0 || r > n) {
    throw ParameterError("gen_kg: need 1 <= r <= n, got r=" +
                         std::to_string(r) + " n=" + std::to_string(n));
  }
  if (p <= 0.0 || p >= 1.0) {
    throw ParameterError("gen_kg: p must be in (0,1)");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw ParameterError("gen_kg: alpha must be in [0,1]");
  }

  KnowledgeGraphInstance inst;
  inst.n = n;
  inst.r = r;
  inst.p = p;
  inst.alpha = alpha;
  inst.avg_degree = p * static_cast<double>(n);

  // Target graph: each of the n^2 ordered pairs independently.
  Rng p_rng = Rng::stream(seed, "kg.p");
  std::vector<std::uint8_t> in_p(n * n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (p_rng.bernoulli(p)) {
        in_p[static_cast<std::uint64_t>(u) * n + v] = 1;
        inst.p_edges.emplace_back(u, v);
      }
    }
  }

  // Hidden nodes and injection: one ordered draw provides both the uniform
  // size-r subset and the uniform bijection onto it.
  Rng s_rng = Rng::stream(seed, "kg.star");
  const std::vector<std::uint64_t> draw = s_rng.sample_distinct(r, n);
  inst.star.assign(draw.begin(), draw.end());
  inst.s_nodes.assign(draw.begin(), draw.end());
  std::sort(inst.s_nodes.begin(), inst.s_nodes.end());

  // Source graph over S^2, re-indexed through the injection: with
  // probability alpha copy P's bit, otherwise toss a fresh p-coin.
  Rng t_rng = Rng::stream(seed, "kg.t");
  std::vector<std::uint8_t> node_used(r, 0);
  for (NodeId xu = 0; xu < r; ++xu) {
    for (NodeId xv = 0; xv < r; ++xv) {
      const std::uint64_t target =
          static_cast<std::uint64_t>(inst.star[xu]) * n + inst.star[xv];
      bool in_t;
      if (t_rng.bernoulli(alpha)) {
        in_t = in_p[target] != 0;
      } else {
        in_t = t_rng.bernoulli(p);
      }
      if (in_t) {
        inst.t_edges_src.emplace_back(xu, xv);
        node_used[xu] = 1;
        node_used[xv] = 1;
      }
    }
  }

  if (inst.t_edges_src.empty()) {
    // The graphs stay as sampled but both languages collapse to singleton
    // distributions on the smallest self-loop the hidden injection can
    // reach, so the likelihood learner has a zero-error choice.
    inst.degenerate = true;
    const NodeId y0 = *std::min_element(inst.star.begin(), inst.star.end());
    NodeId x0 = 0;
    for (NodeId x = 0; x < r; ++x) {
      if (inst.star[x] == y0) x0 = x;
    }
    FiniteDistribution mu = FiniteDistribution::singleton(
        inst.source_space(), static_cast<TextId>(x0) * r + x0);
    FiniteDistribution rho = FiniteDistribution::singleton(
        inst.target_space(), static_cast<TextId>(y0) * n + y0);
    return KgOutput{std::move(inst), std::move(mu), std::move(rho)};
  }

  // T may leave some hidden nodes without incident edges, in which case only
  // the edge-incident assignments of the injection are pinned; the remaining
  // slots are re-shuffled over the unused nodes of the hidden subset. This
  // keeps the injection onto S (so the alpha = 1 agreement between T's image
  // and P inside S^2 is not disturbed) and leaves mu, rho and every error
  // metric unchanged.
  std::vector<NodeId> free_slots;
  std::vector<std::uint8_t> target_taken(n, 0);
  for (NodeId x = 0; x < r; ++x) {
    if (node_used[x]) {
      target_taken[inst.star[x]] = 1;
    } else {
      free_slots.push_back(x);
    }
  }
  if (!free_slots.empty()) {
    std::vector<NodeId> free_targets;
    for (NodeId y : inst.s_nodes) {
      if (!target_taken[y]) free_targets.push_back(y);
    }
    Rng fill_rng = Rng::stream(seed, "kg.star.fill");
    const std::vector<std::uint64_t> pick =
        fill_rng.sample_distinct(free_slots.size(), free_targets.size());
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
      inst.star[free_slots[i]] = free_targets[pick[i]];
    }
  }

  FiniteDistribution mu = FiniteDistribution::uniform_over(
      inst.source_space(), inst.t_text_ids());
  FiniteDistribution rho = kg_prior(inst.p_edges, n);
  return KgOutput{std::move(inst), std::move(mu), std::move(rho)};
}

FiniteDistribution kg_prior(const std::vector<NodePair>& p_edges,
                            std::uint64_t n) {
  const std::uint64_t space = n * n;
  if (p_edges.empty()) {
    return FiniteDistribution::singleton(space, 0);
  }
  const double in_mass =
      0.5 * (1.0 / static_cast<double>(p_edges.size()) +
             1.0 / static_cast<double>(space));
  const double out_mass = 0.5 / static_cast<double>(space);
  std::vector<std::uint8_t> in_p(space, 0);
  for (NodePair e : p_edges) in_p[edge_id(e, n)] = 1;
  std::vector<std::pair<TextId, double>> entries;
  entries.reserve(space);
  for (TextId y = 0; y < space; ++y) {
    entries.emplace_back(y, in_p[y] ? in_mass : out_mass);
  }
  return FiniteDistribution(space, std::move(entries));
}

TranslatorFamily kg_edge_family(const TranslatorFamily& node_family) {
  const std::uint64_t r = node_family.source_size();
  const std::uint64_t n = node_family.target_size();
  std::vector<Translator> members;
  members.reserve(node_family.size());
  node_family.for_each([&](std::uint64_t, std::span<const TextId> nodes) {
    std::vector<TextId> map(r * r);
    for (std::uint64_t u = 0; u < r; ++u) {
      for (std::uint64_t v = 0; v < r; ++v) {
        map[u * r + v] = nodes[u] * n + nodes[v];
      }
    }
    members.push_back(Translator{std::move(map)});
  });
  TranslatorFamily family =
      TranslatorFamily::explicit_family(r * r, n * n, std::move(members));
  if (node_family.star_index()) family.set_star(*node_family.star_index());
  return family;
}

}  // namespace umtlab
