#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "umtlab/types.hpp"

namespace umtlab {

// Injective text map; map[x] is the target id of source id x.
struct Translator {
  std::vector<TextId> map;

  TextId operator()(TextId x) const { return map[x]; }
  std::uint64_t source_size() const { return map.size(); }

  bool operator==(const Translator&) const = default;
};

// Throws ContractError unless `map` is injective into [0, target_size).
void validate_injective(std::span<const TextId> map, std::uint64_t target_size);

// Number of injections [r] -> [n], i.e. n!/(n-r)!. Throws BudgetError on
// 64-bit overflow.
std::uint64_t injection_count(std::uint64_t source_size,
                              std::uint64_t target_size);

// A totally ordered, indexed family of injective translators with an optional
// hidden ground-truth index. Two representations share one interface:
//  - an explicit member list (index order is the list order), and
//  - the implicit family of all injections [source] -> [target] in
//    lexicographic order of their map tuples, enumerated by rank.
class TranslatorFamily {
 public:
  TranslatorFamily() = default;  // empty; fill via the named constructors

  static TranslatorFamily explicit_family(std::uint64_t source_size,
                                          std::uint64_t target_size,
                                          std::vector<Translator> members);
  static TranslatorFamily all_injections(std::uint64_t source_size,
                                         std::uint64_t target_size);

  std::uint64_t size() const;
  std::uint64_t source_size() const { return source_size_; }
  std::uint64_t target_size() const { return target_size_; }

  Translator member(std::uint64_t index) const;

  // Lexicographic rank of a map tuple within the implicit family; for
  // explicit families returns the index of the first equal member.
  std::uint64_t rank_of(std::span<const TextId> map) const;

  std::optional<std::uint64_t> star_index() const { return star_; }
  void set_star(std::uint64_t index);

  // Calls f(index, map) for every member in index order. For the implicit
  // family this runs an in-place successor walk instead of unranking each
  // member, which is what makes exhaustive scoring of millions of
  // injections practical.
  template <typename F>
  void for_each(F&& f) const {
    if (!members_.empty() || size() == 0) {
      for (std::uint64_t i = 0; i < members_.size(); ++i) {
        f(i, std::span<const TextId>(members_[i].map));
      }
      return;
    }
    std::vector<TextId> tuple(source_size_);
    std::vector<char> used(target_size_, 0);
    for (std::uint64_t i = 0; i < source_size_; ++i) {
      tuple[i] = i;
      used[i] = 1;
    }
    const std::uint64_t count = size();
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      f(rank, std::span<const TextId>(tuple));
      if (rank + 1 < count) next_injection(tuple, used);
    }
  }

 private:
  static void next_injection(std::vector<TextId>& tuple,
                             std::vector<char>& used);

  std::uint64_t source_size_ = 0;
  std::uint64_t target_size_ = 0;
  std::vector<Translator> members_;  // empty => implicit all-injections family
  bool implicit_ = false;
  std::optional<std::uint64_t> star_;
};

}  // namespace umtlab
