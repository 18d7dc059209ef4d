#include "umtlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

FiniteDistribution::FiniteDistribution(
    std::uint64_t space_size, std::vector<std::pair<TextId, double>> entries)
    : space_size_(space_size), entries_(std::move(entries)) {
  if (space_size_ == 0) {
    throw ParameterError("FiniteDistribution: space size must be positive");
  }
  std::sort(entries_.begin(), entries_.end());
  double total = 0.0;
  TextId prev = 0;
  bool first = true;
  std::vector<std::pair<TextId, double>> kept;
  kept.reserve(entries_.size());
  for (const auto& [id, mass] : entries_) {
    if (id >= space_size_) {
      throw ParameterError("FiniteDistribution: id " + std::to_string(id) +
                           " outside space of size " +
                           std::to_string(space_size_));
    }
    if (!first && id == prev) {
      throw ParameterError("FiniteDistribution: duplicate id " +
                           std::to_string(id));
    }
    if (mass < 0.0 || std::isnan(mass)) {
      throw ParameterError("FiniteDistribution: negative mass at id " +
                           std::to_string(id));
    }
    prev = id;
    first = false;
    total += mass;
    if (mass > 0.0) kept.emplace_back(id, mass);
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw ParameterError("FiniteDistribution: total mass " +
                         std::to_string(total) + " is not 1 within tolerance");
  }
  entries_ = std::move(kept);
}

FiniteDistribution FiniteDistribution::dense(std::vector<double> mass) {
  std::vector<std::pair<TextId, double>> entries;
  entries.reserve(mass.size());
  for (std::uint64_t id = 0; id < mass.size(); ++id) {
    entries.emplace_back(id, mass[id]);
  }
  return FiniteDistribution(mass.size(), std::move(entries));
}

FiniteDistribution FiniteDistribution::uniform_over(
    std::uint64_t space_size, std::vector<TextId> support) {
  if (support.empty()) {
    throw ParameterError("FiniteDistribution: uniform over empty support");
  }
  const double mass = 1.0 / static_cast<double>(support.size());
  std::vector<std::pair<TextId, double>> entries;
  entries.reserve(support.size());
  for (TextId id : support) entries.emplace_back(id, mass);
  return FiniteDistribution(space_size, std::move(entries));
}

FiniteDistribution FiniteDistribution::singleton(std::uint64_t space_size,
                                                 TextId id) {
  return FiniteDistribution(space_size, {{id, 1.0}});
}

double FiniteDistribution::mass(TextId id) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const std::pair<TextId, double>& e, TextId v) { return e.first < v; });
  if (it == entries_.end() || it->first != id) return 0.0;
  return it->second;
}

std::vector<TextId> FiniteDistribution::support() const {
  std::vector<TextId> ids;
  ids.reserve(entries_.size());
  for (const auto& [id, mass] : entries_) ids.push_back(id);
  return ids;
}

}  // namespace umtlab
