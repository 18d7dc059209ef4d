#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "umtlab/error.hpp"
#include "umtlab/experiments/run.hpp"
#include "umtlab/learner/mle.hpp"
#include "umtlab/measures.hpp"
#include "umtlab/models/kg.hpp"
#include "umtlab/models/lower_bound.hpp"
#include "umtlab/models/rt.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

namespace {

constexpr std::uint64_t kFlatFamilyBudget = std::uint64_t{1} << 23;
constexpr std::uint64_t kRtTextBudget = std::uint64_t{1} << 24;

// All injections [r] -> [n] flattened into one byte array (maps[i*r + k] is
// member i's image of node k), shared across cells of the same shape.
struct FlatNodeFamily {
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::vector<std::uint8_t> maps;

  const std::uint8_t* map_of(std::uint64_t index) const {
    return maps.data() + index * r;
  }
};

std::shared_ptr<const FlatNodeFamily> flat_node_family(std::uint64_t r,
                                                       std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>,
                  std::shared_ptr<const FlatNodeFamily>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{r, n}];
  if (slot) return slot;

  if (n > 255) throw BudgetError("node family: more than 255 target nodes");
  const std::uint64_t count = injection_count(r, n);
  if (count > kFlatFamilyBudget) {
    throw BudgetError("node family of " + std::to_string(count) +
                      " members exceeds the enumeration budget");
  }
  auto flat = std::make_shared<FlatNodeFamily>();
  flat->r = r;
  flat->n = n;
  flat->count = count;
  flat->maps.resize(count * r);
  TranslatorFamily family = TranslatorFamily::all_injections(r, n);
  family.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    std::uint8_t* row = flat->maps.data() + index * r;
    for (std::uint64_t k = 0; k < r; ++k) {
      row[k] = static_cast<std::uint8_t>(map[k]);
    }
  });
  slot = std::move(flat);
  return slot;
}

CellResult run_kg_cell(const ExperimentCell& cell,
                       const ExperimentConfig& config) {
  CellResult out;
  out.cell = cell;
  out.p = config.p;
  out.n = config.n;

  KgOutput kg = gen_kg(cell.seed, config.n, cell.r, config.p, cell.alpha);
  const KnowledgeGraphInstance& inst = kg.instance;
  const std::vector<std::uint8_t> mask = inst.p_mask();
  const std::vector<NodePair>& t_edges = inst.t_edges_src;
  out.instance_t_edges = t_edges.size();
  out.degenerate = inst.degenerate;

  const auto flat = flat_node_family(cell.r, config.n);
  out.theta_count = flat->count;
  const std::uint64_t r = cell.r;
  const std::uint64_t n = config.n;

  // Error over the whole source edge space: one minus the squared fraction
  // of correctly mapped nodes. Defined even when T came out empty.
  const auto source_space_error = [&](const std::uint8_t* map) {
    std::uint64_t good = 0;
    for (std::uint64_t u = 0; u < r; ++u) good += map[u] == inst.star[u];
    const double node_rate = static_cast<double>(good) / static_cast<double>(r);
    return 1.0 - node_rate * node_rate;
  };

  if (config.full_pass) {
    // With an empty T every score is zero and the lexicographically first
    // member wins, exactly as in the streaming tie-break.
    std::uint64_t best_index = 0;
    std::uint64_t best_score = ~std::uint64_t{0};
    for (std::uint64_t i = 0; i < flat->count; ++i) {
      const std::uint8_t* map = flat->map_of(i);
      std::uint64_t score = 0;
      for (NodePair e : t_edges) {
        const std::uint64_t image =
            static_cast<std::uint64_t>(map[e.first]) * n + map[e.second];
        score += mask[image] == 0;
      }
      if (score < best_score) {
        best_score = score;
        best_index = i;
      }
    }
    out.records.push_back(
        {0, "err_top", source_space_error(flat->map_of(best_index))});
    return out;
  }

  const std::uint64_t max_m = config.checkpoints.back();
  if (t_edges.empty()) {
    // Nothing to train on: the learner keeps its initial tie-break pick.
    for (std::uint64_t m : config.checkpoints) {
      out.records.push_back({m, "err_top", source_space_error(flat->map_of(0))});
    }
    return out;
  }
  std::vector<std::uint16_t> scores(flat->count, 0);
  Rng sample_rng = Rng::stream(cell.seed, "kg.samples");
  std::size_t next_checkpoint = 0;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const NodePair e = t_edges[sample_rng.below(t_edges.size())];
    std::uint64_t best_index = 0;
    std::uint16_t best_score = 0xffff;
    const std::uint8_t* row = flat->maps.data();
    for (std::uint64_t i = 0; i < flat->count; ++i, row += r) {
      const std::uint64_t image =
          static_cast<std::uint64_t>(row[e.first]) * n + row[e.second];
      const std::uint16_t s = scores[i] += (mask[image] == 0);
      if (s < best_score) {
        best_score = s;
        best_index = i;
      }
    }
    if (m == config.checkpoints[next_checkpoint]) {
      out.records.push_back(
          {m, "err_top", source_space_error(flat->map_of(best_index))});
      if (++next_checkpoint == config.checkpoints.size()) break;
    }
  }
  return out;
}

CellResult run_rt_cell(const ExperimentCell& cell,
                       const ExperimentConfig& config) {
  CellResult out;
  out.cell = cell;
  out.n = config.depth;

  RtOutput rt = gen_rt(cell.seed, config.vocab, config.depth, config.arity_a,
                       config.arity_b);
  const TreeLanguageInstance& inst = rt.instance;
  const std::uint64_t space = inst.text_space();
  if (space > kRtTextBudget) {
    throw BudgetError("rt cell: text space too large to index");
  }
  out.t_size = inst.t_texts.size();
  out.p_size = inst.p_texts.size();
  out.instance_t_edges = inst.t_texts.size();

  std::vector<std::uint8_t> in_p(space, 0);
  for (TextId t : inst.p_texts) in_p[t] = 1;

  // Word-for-word translators: every permutation of the vocabulary applied
  // position-wise. A hidden permutation is the ground truth; source texts
  // are its preimages of the translated texts.
  const auto flat = flat_node_family(config.vocab, config.vocab);
  out.theta_count = flat->count;
  Rng star_rng = Rng::stream(cell.seed, "rt.star");
  const std::vector<std::uint64_t> star_words =
      star_rng.sample_distinct(config.vocab, config.vocab);
  std::vector<std::uint64_t> star_inverse(config.vocab);
  for (std::uint64_t w = 0; w < config.vocab; ++w) {
    star_inverse[star_words[w]] = w;
  }

  std::vector<std::uint64_t> place(inst.depth);  // vocab^(depth-1-pos)
  {
    std::uint64_t value = 1;
    for (std::uint64_t pos = inst.depth; pos-- > 0;) {
      place[pos] = value;
      value *= inst.vocab_size;
    }
  }
  const auto words_of = [&](TextId text, std::vector<std::uint64_t>& words) {
    for (std::uint64_t pos = 0; pos < inst.depth; ++pos) {
      words[pos] = text / place[pos] % inst.vocab_size;
    }
  };
  const auto image_of = [&](const std::uint8_t* map,
                            const std::vector<std::uint64_t>& words) {
    TextId image = 0;
    for (std::uint64_t pos = 0; pos < inst.depth; ++pos) {
      image += static_cast<TextId>(map[words[pos]]) * place[pos];
    }
    return image;
  };

  std::vector<std::uint64_t> words(inst.depth);
  // Source texts: the hidden permutation's preimages of the translated set.
  std::vector<TextId> sources;
  sources.reserve(inst.t_texts.size());
  for (TextId t : inst.t_texts) {
    words_of(t, words);
    TextId x = 0;
    for (std::uint64_t pos = 0; pos < inst.depth; ++pos) {
      x += static_cast<TextId>(star_inverse[words[pos]]) * place[pos];
    }
    sources.push_back(x);
  }

  const auto member_error = [&](const std::uint8_t* map) {
    std::uint64_t bad = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      words_of(sources[i], words);
      bad += image_of(map, words) != inst.t_texts[i];
    }
    return static_cast<double>(bad) / static_cast<double>(sources.size());
  };

  if (config.full_pass) {
    std::uint64_t best_index = 0;
    std::uint64_t best_score = ~std::uint64_t{0};
    for (std::uint64_t i = 0; i < flat->count; ++i) {
      const std::uint8_t* map = flat->map_of(i);
      std::uint64_t score = 0;
      for (TextId x : sources) {
        words_of(x, words);
        score += in_p[image_of(map, words)] == 0;
      }
      if (score < best_score) {
        best_score = score;
        best_index = i;
      }
    }
    out.records.push_back(
        {0, "err_top", member_error(flat->map_of(best_index))});
    return out;
  }

  const std::uint64_t max_m = config.checkpoints.back();
  std::vector<std::uint16_t> scores(flat->count, 0);
  Rng sample_rng = Rng::stream(cell.seed, "rt.samples");
  std::size_t next_checkpoint = 0;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const TextId x = sources[sample_rng.below(sources.size())];
    words_of(x, words);
    std::uint64_t best_index = 0;
    std::uint16_t best_score = 0xffff;
    for (std::uint64_t i = 0; i < flat->count; ++i) {
      const std::uint16_t s =
          scores[i] += (in_p[image_of(flat->map_of(i), words)] == 0);
      if (s < best_score) {
        best_score = s;
        best_index = i;
      }
    }
    if (m == config.checkpoints[next_checkpoint]) {
      out.records.push_back(
          {m, "err_top", member_error(flat->map_of(best_index))});
      if (++next_checkpoint == config.checkpoints.size()) break;
    }
  }
  return out;
}

CellResult run_lb_cell(const ExperimentCell& cell,
                       const ExperimentConfig& config) {
  CellResult out;
  out.cell = cell;
  out.n = config.n_params;
  out.t_size = config.t_size;
  out.p_size = config.t_size;

  const std::uint64_t max_m = config.checkpoints.back();
  LowerBoundOutput lb = gen_lower_bound_instance(
      cell.seed, config.n_params, cell.alpha, max_m, config.t_size);
  const LowerBoundInstance& inst = lb.instance;
  out.theta_count = inst.family.size();
  out.instance_t_edges = inst.mu_support.size();
  out.degenerate = inst.degenerate;

  Rng sample_rng = Rng::stream(cell.seed, "lb.samples");
  std::vector<TextId> samples;
  samples.reserve(max_m);
  for (std::uint64_t m = 0; m < max_m; ++m) {
    samples.push_back(inst.mu_support[sample_rng.below(inst.mu_support.size())]);
  }
  for (std::uint64_t m : config.checkpoints) {
    const MleResult fit =
        mle(std::span(samples.data(), m), lb.rho, inst.family);
    out.records.push_back(
        {m, "err_mle", err(inst.family, fit.theta_index, lb.mu)});
  }
  return out;
}

}  // namespace

CellResult run_cn_cell_impl(const ExperimentCell& cell,
                            const ExperimentConfig& config);

CellResult run_cell(const ExperimentCell& cell,
                    const ExperimentConfig& config) {
  try {
    switch (cell.model) {
      case ModelKind::kKg: return run_kg_cell(cell, config);
      case ModelKind::kCn: return run_cn_cell_impl(cell, config);
      case ModelKind::kRt: return run_rt_cell(cell, config);
      case ModelKind::kLb: return run_lb_cell(cell, config);
    }
    throw ConfigError("run_cell: unknown model");
  } catch (const std::exception& e) {
    throw std::runtime_error("cell " + cell.descriptor() + ": " + e.what());
  }
}

std::vector<CellResult> run_cells(const ExperimentConfig& config,
                                  unsigned threads) {
  const std::vector<ExperimentCell> cells = plan_cells(config);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > cells.size()) threads = static_cast<unsigned>(cells.size());

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        results[i] = run_cell(cells[i], config);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace umtlab
