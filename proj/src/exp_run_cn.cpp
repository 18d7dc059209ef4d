#include <cstdint>
#include <unordered_map>
#include <vector>

#include "umtlab/error.hpp"
#include "umtlab/experiments/run.hpp"
#include "umtlab/rng.hpp"
#include "umtlab/types.hpp"

namespace umtlab {

namespace detail {

std::vector<double> plausible_error_curve(const std::vector<MemberFate>& fates,
                                          std::uint64_t max_m) {
  std::vector<double> error_sum(max_m + 2, 0.0);
  std::vector<std::uint64_t> count(max_m + 2, 0);
  for (const MemberFate& fate : fates) {
    std::uint64_t d = fate.death;
    if (d > max_m + 1) d = max_m + 1;
    if (d == 0) throw ContractError("plausible_error_curve: death time 0");
    error_sum[d] += fate.holdout_error;
    ++count[d];
  }
  std::vector<double> curve(max_m, 0.0);
  double alive_error = 0.0;
  std::uint64_t alive = 0;
  for (std::uint64_t m = max_m; m >= 1; --m) {
    alive_error += error_sum[m + 1];
    alive += count[m + 1];
    if (alive == 0) {
      throw ContractError("plausible_error_curve: no member survives");
    }
    curve[m - 1] = alive_error / static_cast<double>(alive);
  }
  return curve;
}

namespace {

// Open-addressing set of drawn target values, reused across members via
// epoch stamps so no per-member clearing is needed.
class UsedValues {
 public:
  explicit UsedValues(std::size_t at_least) {
    std::size_t size = 64;
    while (size < 4 * at_least) size *= 2;
    keys_.assign(size, 0);
    stamps_.assign(size, 0);
  }

  void next_epoch() { ++epoch_; }

  // Returns false when the value was already present this epoch.
  bool insert(std::uint64_t value) {
    const std::size_t mask = keys_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(mix64(value)) & mask;
    while (stamps_[slot] == epoch_) {
      if (keys_[slot] == value) return false;
      slot = (slot + 1) & mask;
    }
    keys_[slot] = value;
    stamps_[slot] = epoch_;
    return true;
  }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 0;
};

}  // namespace
}  // namespace detail

// Streams the rule-out learner over a family too large to materialize.
// Structure streams ("cn.sensical", "cn.star", "cn.member" k, ...) mirror
// gen_cn, but a member's injection is realized only on the source texts it
// is actually asked about: values are drawn without replacement along the
// canonical probe order (training samples first, then the holdout), which
// restricted to any probe set has exactly the law of a full uniform
// injection. One member is the fully materialized ground truth.
CellResult run_cn_cell_impl(const ExperimentCell& cell,
                            const ExperimentConfig& config) {
  const std::uint64_t t_size = config.t_size;
  const std::uint64_t p_size = config.p_size;
  const std::uint64_t members = config.family_size;
  const std::uint64_t holdout_size = config.holdout;
  const std::uint64_t max_m = config.checkpoints.back();

  CellResult out;
  out.cell = cell;
  out.t_size = t_size;
  out.p_size = p_size;
  out.theta_count = members;

  Rng mask_rng = Rng::stream(cell.seed, "cn.sensical");
  std::vector<std::uint8_t> sensical(p_size);
  for (TextId y = 0; y < p_size; ++y) {
    sensical[y] = mask_rng.bernoulli(cell.alpha) ? 0 : 1;
  }

  Rng star_pick = Rng::stream(cell.seed, "cn.star");
  const std::uint64_t star_index = star_pick.below(members);
  Rng star_stream = Rng::stream(cell.seed, "cn.member", star_index);
  const std::vector<std::uint64_t> star_map =
      star_stream.sample_distinct(t_size, p_size);

  std::vector<TextId> support;
  for (TextId x = 0; x < t_size; ++x) {
    if (sensical[star_map[x]]) support.push_back(x);
  }
  if (support.empty()) {
    // Everything was removed; collapse to the singleton on the ground-truth
    // image of text 0.
    out.degenerate = true;
    sensical.assign(p_size, 0);
    sensical[star_map[0]] = 1;
    support.assign(1, 0);
  }
  out.instance_t_edges = support.size();

  Rng sample_rng = Rng::stream(cell.seed, "cn.samples");
  std::vector<TextId> samples(max_m);
  for (std::uint64_t i = 0; i < max_m; ++i) {
    samples[i] = support[sample_rng.below(support.size())];
  }
  Rng holdout_rng = Rng::stream(cell.seed, "cn.holdout");
  std::vector<TextId> holdout(holdout_size);
  for (std::uint64_t j = 0; j < holdout_size; ++j) {
    holdout[j] = support[holdout_rng.below(support.size())];
  }

  // Canonical probe order: first occurrences of the samples, then of the
  // holdout texts. Every member consumes its value stream in this order.
  std::vector<TextId> probe_xs;
  probe_xs.reserve(max_m + holdout_size);
  std::unordered_map<TextId, std::uint32_t> probe_index;
  probe_index.reserve(2 * (max_m + holdout_size));
  const auto intern = [&](TextId x) {
    const auto [it, inserted] =
        probe_index.try_emplace(x, static_cast<std::uint32_t>(probe_xs.size()));
    if (inserted) probe_xs.push_back(x);
    return it->second;
  };
  std::vector<std::uint32_t> sample_probe(max_m);
  for (std::uint64_t i = 0; i < max_m; ++i) sample_probe[i] = intern(samples[i]);
  std::vector<std::uint32_t> holdout_probe(holdout_size);
  for (std::uint64_t j = 0; j < holdout_size; ++j) {
    holdout_probe[j] = intern(holdout[j]);
  }
  const std::uint32_t probe_count = static_cast<std::uint32_t>(probe_xs.size());

  std::vector<detail::MemberFate> fates(members);
  detail::UsedValues used(probe_count + 1);
  std::vector<std::uint64_t> values(probe_count);

  for (std::uint64_t k = 0; k < members; ++k) {
    if (k == star_index) {
      fates[k].death = static_cast<std::uint32_t>(max_m + 1);
      fates[k].holdout_error = 0.0f;
      continue;
    }
    Rng member_rng = Rng::stream(cell.seed, "cn.member", k);
    used.next_epoch();
    std::uint32_t drawn = 0;
    const auto draw_through = [&](std::uint32_t probe) {
      while (drawn <= probe) {
        std::uint64_t v;
        do {
          v = member_rng.below(p_size);
        } while (!used.insert(v));
        values[drawn++] = v;
      }
    };

    std::uint32_t death = static_cast<std::uint32_t>(max_m + 1);
    for (std::uint64_t i = 0; i < max_m; ++i) {
      draw_through(sample_probe[i]);
      if (!sensical[values[sample_probe[i]]]) {
        death = static_cast<std::uint32_t>(i + 1);
        break;
      }
    }
    float holdout_error = 0.0f;
    if (death > 1) {
      draw_through(probe_count - 1);
      std::uint64_t disagreements = 0;
      for (std::uint64_t j = 0; j < holdout_size; ++j) {
        disagreements += values[holdout_probe[j]] != star_map[holdout[j]];
      }
      holdout_error = static_cast<float>(
          static_cast<double>(disagreements) /
          static_cast<double>(holdout_size));
    }
    fates[k] = detail::MemberFate{death, holdout_error};
  }

  const std::vector<double> curve =
      detail::plausible_error_curve(fates, max_m);
  for (std::uint64_t m : config.checkpoints) {
    out.records.push_back({m, "err_plausible", curve[m - 1]});
  }
  return out;
}

}  // namespace umtlab
