#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "umtlab/distribution.hpp"
#include "umtlab/translator.hpp"
#include "umtlab/types.hpp"

namespace umtlab {

using NodePair = std::pair<NodeId, NodeId>;

inline TextId edge_id(NodePair e, std::uint64_t node_count) {
  return static_cast<TextId>(e.first) * node_count + e.second;
}

// A correlated pair of random digraphs. Texts are directed edges (self-loops
// included): the target space is all n^2 node pairs over Y, the source space
// all r^2 pairs over X. A hidden injection star: X -> Y carries source edges
// onto target edges node-wise.
struct KnowledgeGraphInstance {
  std::uint64_t n = 0;  // target nodes
  std::uint64_t r = 0;  // source nodes
  double p = 0.0;       // edge density
  double alpha = 0.0;   // agreement between the two edge sets

  std::vector<NodePair> p_edges;       // target graph, sorted
  std::vector<NodePair> t_edges_src;   // source graph re-indexed to X, sorted
  std::vector<NodeId> s_nodes;         // hidden size-r node subset, sorted
  std::vector<NodeId> star;            // star[x] = hidden target node of x
  double avg_degree = 0.0;             // p * n, metadata only
  bool degenerate = false;             // empty T collapsed to the singleton

  std::uint64_t source_space() const { return r * r; }
  std::uint64_t target_space() const { return n * n; }

  // Dense membership mask over the n^2 target edge ids.
  std::vector<std::uint8_t> p_mask() const;

  // Source edges as text ids over the r^2 source space, sorted.
  std::vector<TextId> t_text_ids() const;

  // The node-level family of all injections X -> Y with the hidden star's
  // rank set; its index order agrees with the induced edge-level order.
  TranslatorFamily node_family() const;
};

struct KgOutput {
  KnowledgeGraphInstance instance;
  FiniteDistribution mu;   // uniform over the source edges of T
  FiniteDistribution rho;  // smoothed prior over all target edges
};

// Samples P edge-wise iid(p), a uniform size-r node subset with a uniform
// hidden injection onto it, and T correlated with P through alpha. When T
// misses some of the chosen nodes, the unconstrained part of the injection
// is re-drawn uniformly over the whole target node set. An empty T yields
// the degenerate singleton instance concentrated on the smallest self-loop.
// alpha = 0 (full independence) and alpha = 1 (full agreement) are allowed.
KgOutput gen_kg(std::uint64_t seed, std::uint64_t n, std::uint64_t r, double p,
                double alpha);

// Two-level prior from the target edge set: mass (1/|P| + 1/n^2)/2 on edges
// of P and 1/(2 n^2) elsewhere; full support. Empty P falls back to the
// degenerate singleton on edge (0,0).
FiniteDistribution kg_prior(const std::vector<NodePair>& p_edges,
                            std::uint64_t n);

// Edge-level view of a node family: member i maps source edge (u,v) to
// (theta_i(u), theta_i(v)). Materialized explicitly, so only suitable for
// enumerable families.
TranslatorFamily kg_edge_family(const TranslatorFamily& node_family);

}  // namespace umtlab
