#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "umtlab/types.hpp"

namespace umtlab {

// Explicit probability table over a dense integer text space. Entries with
// zero mass are implicit; support() is exactly the IDs with positive mass.
// Total mass is validated to 1 within kMassTolerance on construction.
class FiniteDistribution {
 public:
  // `entries` holds (id, mass) pairs; ids need not be sorted but must be
  // distinct and inside [0, space_size). Zero-mass entries are dropped.
  FiniteDistribution(std::uint64_t space_size,
                     std::vector<std::pair<TextId, double>> entries);

  static FiniteDistribution dense(std::vector<double> mass);
  static FiniteDistribution uniform_over(std::uint64_t space_size,
                                         std::vector<TextId> support);
  static FiniteDistribution singleton(std::uint64_t space_size, TextId id);

  double mass(TextId id) const;
  std::uint64_t space_size() const { return space_size_; }

  // Sorted by id, strictly positive masses only.
  std::span<const std::pair<TextId, double>> entries() const {
    return entries_;
  }
  std::vector<TextId> support() const;
  std::uint64_t support_size() const { return entries_.size(); }

  bool operator==(const FiniteDistribution&) const = default;

 private:
  std::uint64_t space_size_ = 0;
  std::vector<std::pair<TextId, double>> entries_;
};

}  // namespace umtlab
